import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamedge.bending import (
    Config,
    bend,
    estimate_phi_image,
    gauge_fix,
    is_critical,
    phi,
    rotate_about,
    sample_config,
    sample_configs,
)
from hamedge.errors import BadIndices, NotGeneric, UndefinedAxis
from hamedge.polygon import add_tiny_edge

ALPHA = (1, 1, 1, 2)


def test_samples_are_closed_polygons():
    rho = sample_configs((2, 4, 6, 9), 500, seed=3)
    assert rho.shape == (500, 4, 3)
    assert np.abs(rho.sum(axis=1)).max() <= 1e-10
    assert np.abs(np.linalg.norm(rho, axis=2) - [2, 4, 6, 9]).max() <= 1e-10


def test_sampling_is_deterministic():
    a = sample_configs(ALPHA, 100, seed=11)
    b = sample_configs(ALPHA, 100, seed=11)
    c = sample_configs(ALPHA, 100, seed=12)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_sampling_rejects_bad_input():
    with pytest.raises(NotGeneric):
        sample_configs((1, 1, 1, 1), 4, seed=0)
    with pytest.raises(BadIndices):
        sample_configs((1, 1), 4, seed=0)


def test_zero_samples():
    assert sample_configs(ALPHA, 0, seed=0).shape == (0, 4, 3)


def test_rotate_about_matches_rotation_matrix():
    theta = 0.7
    v = np.array([1.0, 2.0, 3.0])
    z = np.array([0.0, 0.0, 1.0])
    r = np.array([[math.cos(theta), -math.sin(theta), 0], [math.sin(theta), math.cos(theta), 0], [0, 0, 1]])
    assert np.allclose(rotate_about(v, z, theta), r @ v)


def test_bend_conserves_everything():
    c = sample_config((2, 4, 6, 9), seed=5)
    before = phi(c, 3, 4)
    for theta in np.linspace(-2 * np.pi, 2 * np.pi, 17):
        d = bend(c, 3, 4, theta)
        assert d.closure() <= 1e-10
        assert d.norm_error() <= 1e-10
        assert abs(phi(d, 3, 4) - before) <= 1e-10
        # the other edges do not move
        assert np.array_equal(d.rho[:2], c.rho[:2])


def test_bend_full_turn_is_identity():
    c = sample_config(ALPHA, seed=1)
    assert np.allclose(bend(c, 1, 2, 2 * np.pi).rho, c.rho, atol=1e-12)


def test_bend_composes():
    c = sample_config(ALPHA, seed=2)
    once = bend(c, 2, 4, 1.1)
    twice = bend(bend(c, 2, 4, 0.5), 2, 4, 0.6)
    assert np.allclose(once.rho, twice.rho, atol=1e-12)


def test_bend_undefined_axis():
    rho = np.array([[1.0, 0, 0], [-1.0, 0, 0], [0, 1.0, 0], [0, -1.0, 0]])
    c = Config(rho, (1, 1, 1, 1))
    with pytest.raises(UndefinedAxis):
        bend(c, 1, 2, 0.3)
    with pytest.raises(BadIndices):
        bend(c, 1, 1, 0.3)


def test_gauge_fix():
    c = sample_config((2, 4, 6, 9), seed=7)
    g = gauge_fix(c)
    assert np.allclose(g.rho[0], [0, 0, 2])
    assert abs(g.rho[1][1]) < 1e-12 and g.rho[1][0] >= 0
    assert np.allclose(g.gram(), c.gram(), atol=1e-12)
    assert g.closure() <= 1e-10


def test_gauge_fix_collinear():
    rho = np.array([[0, 1.0, 0], [0, -2.0, 0], [0, 1.0, 0]])
    g = gauge_fix(Config(rho, (1, 2, 1)))
    assert np.allclose(g.rho, [[0, 0, 1], [0, 0, -2], [0, 0, 1]])


def test_is_critical():
    # edges 3 and 4 are parallel
    rho = np.array([[0, 1.0, 0], [1.0, 0, 0], [-0.5, -0.5, 0], [-0.5, -0.5, 0]])
    c = Config(rho, np.linalg.norm(rho, axis=1))
    assert is_critical(c, 1, 2)
    gen = sample_config((2, 4, 6, 9), seed=0)
    assert not is_critical(gen, 1, 2)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**31 - 1), st.floats(-10, 10))
def test_bend_property(seed, theta):
    c = sample_config((1, 2, 2, 2, 4), seed=seed)
    d = bend(c, 1, 5, theta)
    assert abs(phi(d, 1, 5) - phi(c, 1, 5)) <= 1e-10
    assert d.closure() <= 1e-10
    assert d.norm_error() <= 1e-10


def test_estimate_matches_analytic():
    est = estimate_phi_image(ALPHA, 3, 4, n_samples=1000, seed=0)
    assert est.analytic.lo == 1 and est.analytic.hi == 2
    assert abs(est.lo - 1) <= 1e-3
    assert abs(est.hi - 2) <= 2e-3
    assert est.analytic.lo - 1e-9 <= est.lo <= est.hi <= est.analytic.hi + 1e-9
    d = est.to_dict()
    assert d["analytic_lo"] == "1" and d["samples"] == 1000


def test_estimate_zero_indexed_cut_vector():
    cut = add_tiny_edge(ALPHA, Fraction(1, 4))
    est = estimate_phi_image(cut, 2, 0, n_samples=500, seed=4)
    assert abs(est.lo - 0.75) <= 1e-3 and abs(est.hi - 1.25) <= 1e-3


def test_estimate_is_deterministic():
    a = estimate_phi_image(ALPHA, 1, 2, n_samples=300, seed=9, refine_steps=20)
    b = estimate_phi_image(ALPHA, 1, 2, n_samples=300, seed=9, refine_steps=20)
    assert (a.lo, a.hi) == (b.lo, b.hi)
