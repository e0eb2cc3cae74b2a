"""
Bending flows and the range of a diagonal
=========================================

Sample closed polygons, bend them, and compare the sampled range of
|rho_i + rho_j| with the exact interval.
"""
from fractions import Fraction

import numpy as np

from hamedge.bending import bend, estimate_phi_image, gauge_fix, phi, sample_config
from hamedge.polygon import add_tiny_edge, phi_image_analytic

c = sample_config((2, 4, 6, 9), seed=1)
print("closure:", c.closure(), " edge-length error:", c.norm_error())
print("gauge fixed first two edges:\n", np.round(gauge_fix(c).rho[:2], 6))

# Bending along the diagonal 3-4 keeps that diagonal fixed and the polygon closed.
for theta in (0.5, 1.0, np.pi):
    d = bend(c, 3, 4, theta)
    print(f"theta={theta:.3f}  phi_34={phi(d, 3, 4):.12f}  closure={d.closure():.1e}")

for alpha, i, j in (((1, 1, 1, 2), 3, 4), ((2, 4, 6, 9), 4, 3),
                    (add_tiny_edge((1, 1, 1, 2), Fraction(1, 4)), 2, 0)):
    exact = phi_image_analytic(alpha, i, j)
    est = estimate_phi_image(alpha, i, j, n_samples=2000, seed=0)
    print(f"{alpha}: sampled [{est.lo:.6f}, {est.hi:.6f}]  exact [{exact.lo}, {exact.hi}]  length {exact.length}")
