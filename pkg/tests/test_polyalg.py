import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamedge.errors import DomainError, NegativeBetti, NotDivisible
from hamedge.polyalg import (
    GradedPoly,
    PoincarePoly,
    cp_poincare,
    gauss_binomial,
    is_palindromic,
    one_minus_t,
    poly_add,
    poly_exact_div,
    poly_mul,
    quadric_poincare,
)
from oracles import gauss_by_partitions, gauss_other_pascal, schoolbook_mul

P = GradedPoly

small_polys = st.lists(st.integers(-6, 6), min_size=0, max_size=8).map(GradedPoly)
nonzero_polys = small_polys.filter(lambda p: not p.is_zero())


def test_trimming_and_zero():
    assert P([1, 0, 1, 0, 0]).coeffs == (1, 0, 1)
    assert P([0, 0]).coeffs == ()
    assert P().degree == -1


def test_add():
    assert poly_add(P([1]), P([0, 0, 1])) == P([1, 0, 1])
    assert poly_add(P(), P([1, 0, 1])) == P([1, 0, 1])
    assert poly_add(P([1, 0, 1]), P([1, 0, 1])) == P([2, 0, 2])
    assert P([1, 0, 1]) - P([1, 0, 1]) == P()


def test_mul():
    assert poly_mul(P([1, 0, 1]), P([1, 0, 1])) == P([1, 0, 2, 0, 1])
    assert poly_mul(P([3, 1, 4]), P([1])) == P([3, 1, 4])
    assert poly_mul(P([1, 2]), P()) == P()


@given(small_polys, small_polys)
def test_mul_matches_schoolbook(a, b):
    assert poly_mul(a, b).to_json() == schoolbook_mul(list(a.coeffs), list(b.coeffs))


def test_mul_truncated_series_round_trip():
    # (1 - t^4) * (1 + t^2 + t^4 + ... + t^20) agrees with 1 + t^2 - t^22 - t^24 ...
    series = cp_poincare(10)
    prod = poly_mul(one_minus_t(4), series)
    assert prod.to_json() == schoolbook_mul([1, 0, 0, 0, -1], list(series.coeffs))
    assert poly_exact_div(prod, one_minus_t(4)) == series


def test_exact_div():
    assert poly_exact_div(one_minus_t(6), one_minus_t(2)) == P([1, 0, 1, 0, 1])
    with pytest.raises(NotDivisible):
        poly_exact_div(one_minus_t(4), one_minus_t(6))
    with pytest.raises(NotDivisible):
        poly_exact_div(P([1, 1]), P([2]))
    with pytest.raises(ZeroDivisionError):
        poly_exact_div(P([1]), P())


@pytest.mark.parametrize("k", [1, 2, 3, 5])
@pytest.mark.parametrize("n", [0, 2, 4])
def test_exact_div_round_trip_cp(n, k):
    assert poly_exact_div(one_minus_t(2 * k) * cp_poincare(n), one_minus_t(2 * k)) == cp_poincare(n)


@settings(max_examples=200)
@given(small_polys, nonzero_polys)
def test_exact_div_round_trip(a, b):
    assert poly_exact_div(poly_mul(a, b), b) == a


def test_cp_poincare():
    assert cp_poincare(0) == P([1])
    assert cp_poincare(1) == P([1, 0, 1])
    assert cp_poincare(3) == P([1, 0, 1, 0, 1, 0, 1])
    with pytest.raises(DomainError):
        cp_poincare(-1)


@pytest.mark.parametrize("n", range(21))
def test_cp_is_geometric_quotient(n):
    assert cp_poincare(n) == poly_exact_div(one_minus_t(2 * (n + 1)), one_minus_t(2))


def test_gauss_binomial_values():
    assert gauss_binomial(2, 1) == P([1, 0, 1])
    assert gauss_binomial(4, 2) == P([1, 0, 1, 0, 2, 0, 1, 0, 1])
    assert gauss_binomial(7, 0) == P([1])
    assert gauss_binomial(4, 2).degree == 2 * 2 * 2
    with pytest.raises(DomainError):
        gauss_binomial(3, 4)
    with pytest.raises(DomainError):
        gauss_binomial(3, -1)


@pytest.mark.parametrize("r", range(11))
def test_gauss_binomial_oracles(r):
    for k in range(r + 1):
        g = gauss_binomial(r, k)
        assert g.to_json() == gauss_by_partitions(r, k)
        assert g.to_json() == gauss_other_pascal(r, k)
        assert g == gauss_binomial(r, r - k)
        assert g.degree == 2 * k * (r - k)


def test_quadric():
    # m odd: Morse-Bott equality with P0 = P1 = P(CP^j), r1 = j + 1
    assert quadric_poincare(3) == cp_poincare(1) + cp_poincare(1).shift(4)
    assert quadric_poincare(3) == P([1, 0, 1, 0, 1, 0, 1])
    assert quadric_poincare(5) == cp_poincare(2) + cp_poincare(2).shift(6)
    # m = 2 is S^2 x S^2
    assert quadric_poincare(2) == cp_poincare(1) * cp_poincare(1)
    assert quadric_poincare(4) == P([1, 0, 1, 0, 2, 0, 1, 0, 1])


def test_palindromic():
    assert is_palindromic(P([1, 0, 1, 0, 1]), 4)
    assert not is_palindromic(P([1, 0, 2]), 2)
    assert is_palindromic(quadric_poincare(4), 8)
    assert not is_palindromic(P([1, 0, 1]), 1)


@pytest.mark.parametrize("m", range(1, 9))
def test_model_polys_palindromic(m):
    assert is_palindromic(cp_poincare(m), 2 * m)
    assert is_palindromic(quadric_poincare(m), 2 * m)


def test_poincare_rejects_negative():
    with pytest.raises(NegativeBetti):
        PoincarePoly([1, -1])
    raw = one_minus_t(2)
    assert raw[2] == -1  # raw values are allowed
    with pytest.raises(NegativeBetti):
        raw.as_poincare()


def test_json_round_trip():
    p = P([1, 0, 1])
    assert p.to_json() == [1, 0, 1]
    assert GradedPoly.from_json("[1,0,1]") == p
    assert GradedPoly.from_json([]) == P()
    with pytest.raises(DomainError):
        GradedPoly.from_json('[1, "a"]')


def test_str():
    assert str(P([1, 0, 1])) == "1+t²"
    assert str(one_minus_t(4)) == "1-t⁴"
    assert str(P()) == "0"
