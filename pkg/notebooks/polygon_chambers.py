"""
Length vectors, genericity and chambers
=======================================

Exact rational arithmetic throughout; lengths can be given as strings.
"""
from fractions import Fraction

from hamedge.polygon import (
    add_tiny_edge,
    chamber_cpn,
    chamber_cut,
    genericity_margin,
    is_generic,
    parse_lengths,
    perturb,
)

alpha = parse_lengths("1,1,1,2")
print(alpha, "generic:", is_generic(alpha.alpha), "margin:", genericity_margin(alpha.alpha))
print("(1,1,1,1) generic:", is_generic((1, 1, 1, 1)))

# The margin bounds how far one edge can move before a degenerate polygon appears.
m = genericity_margin(alpha.alpha)
for delta in (-m / 2, m / 2, m):
    moved = perturb(alpha, 4, delta)
    print(f"  alpha_4 + {delta}: {moved} generic={is_generic(moved.alpha)}")

res = chamber_cpn(alpha)
print(res.kind, res.model, "ell =", res.ell)
print(chamber_cpn((2, 4, 6, 9)).model)

# A tiny extra edge moves us into the chamber of a cut projective space.
cut = add_tiny_edge(alpha, Fraction(1, 4))
print("with a tiny edge:", cut, "indexed from 0")
res = chamber_cut(cut)
print(res.kind, "|", res.model, "|", res.diffeo_type)
