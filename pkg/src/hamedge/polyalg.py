"""Exact integer polynomials in one variable ``t`` graded by cohomological degree.

A :class:`GradedPoly` is an unchecked value: ``1 - t**4`` is perfectly fine.
:class:`PoincarePoly` is the subclass used for Betti-number data and refuses
negative coefficients at construction.  Arithmetic always returns plain
:class:`GradedPoly`; use :meth:`GradedPoly.as_poincare` to re-enter the
checked world.

Coefficients are stored as a tuple indexed by degree, trailing zeros trimmed,
so ``GradedPoly([1, 0, 1])`` is ``1 + t^2`` and the zero polynomial is ``()``.
"""
from __future__ import annotations

import functools
import json
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, NegativeBetti, NotDivisible

__all__ = [
    "GradedPoly",
    "PoincarePoly",
    "poly_add",
    "poly_mul",
    "poly_exact_div",
    "one_minus_t",
    "cp_poincare",
    "gauss_binomial",
    "quadric_poincare",
    "connected_sum_cp_poincare",
    "is_palindromic",
]

_SUPERSCRIPT = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class GradedPoly:
    """Immutable integer polynomial; ``coeffs[d]`` is the coefficient of ``t^d``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "_coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("GradedPoly is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> GradedPoly:
        if degree < 0:
            raise DomainError(f"negative degree {degree}")
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, d: int) -> int:
        if d < 0:
            return 0
        return self._coeffs[d] if d < len(self._coeffs) else 0

    def __iter__(self):
        return iter(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, GradedPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __add__(self, other):
        return poly_add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return GradedPoly(-c for c in self._coeffs)

    def __sub__(self, other):
        return poly_add(self, -_coerce(other))

    def __rsub__(self, other):
        return poly_add(_coerce(other), -self)

    def __mul__(self, other):
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__

    def shift(self, d: int) -> GradedPoly:
        """Multiply by ``t^d``."""
        if d < 0:
            raise DomainError(f"negative shift {d}")
        if self.is_zero():
            return GradedPoly()
        return GradedPoly((0,) * d + self._coeffs)

    def has_odd(self) -> bool:
        return any(c != 0 for c in self._coeffs[1::2])

    def odd_part(self) -> GradedPoly:
        return GradedPoly(c if d % 2 else 0 for d, c in enumerate(self._coeffs))

    def evaluate(self, x):
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def as_poincare(self) -> PoincarePoly:
        return PoincarePoly(self._coeffs)

    def to_json(self) -> list[int]:
        return list(self._coeffs)

    @classmethod
    def from_json(cls, data: str | Sequence[int]) -> GradedPoly:
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in data):
            raise DomainError(f"expected a JSON array of integers, got {data!r}")
        return cls(data)

    def __repr__(self):
        return f"{type(self).__name__}({list(self._coeffs)})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for d, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                power = "t" if d == 1 else "t" + str(d).translate(_SUPERSCRIPT)
                body = power if mag == 1 else f"{mag}{power}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += sign + body
        return out


class PoincarePoly(GradedPoly):
    """A GradedPoly whose coefficients are Betti numbers, hence nonnegative."""

    __slots__ = ()

    def __init__(self, coeffs: Iterable[int] = ()):
        super().__init__(coeffs)
        bad = [d for d, c in enumerate(self._coeffs) if c < 0]
        if bad:
            raise NegativeBetti(f"negative Betti number in degree {bad[0]}: {list(self._coeffs)}")

    def as_poincare(self) -> PoincarePoly:
        return self


def _coerce(x) -> GradedPoly:
    if isinstance(x, GradedPoly):
        return x
    if isinstance(x, int):
        return GradedPoly([x])
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


def poly_add(a: GradedPoly, b: GradedPoly) -> GradedPoly:
    n = max(len(a), len(b))
    return GradedPoly(a[d] + b[d] for d in range(n))


def poly_mul(a: GradedPoly, b: GradedPoly) -> GradedPoly:
    if a.is_zero() or b.is_zero():
        return GradedPoly()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return GradedPoly(out)


def poly_exact_div(num: GradedPoly, den: GradedPoly) -> GradedPoly:
    """Return ``q`` with ``q * den == num``; raise :class:`NotDivisible` otherwise.

    The quotient must have integer coefficients.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return GradedPoly()
    rem = [Fraction(c) for c in num.coeffs]
    dd = den.degree
    lead = den.coeffs[-1]
    if num.degree < dd:
        raise NotDivisible(f"{num} is not divisible by {den}")
    quot = [Fraction(0)] * (num.degree - dd + 1)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + dd] / lead
        quot[k] = c
        if c:
            for i, dc in enumerate(den.coeffs):
                rem[k + i] -= c * dc
    if any(rem) or any(q.denominator != 1 for q in quot):
        raise NotDivisible(f"{num} is not divisible by {den}")
    return GradedPoly(int(q) for q in quot)


def one_minus_t(power: int) -> GradedPoly:
    """The raw polynomial ``1 - t^power``."""
    return GradedPoly([1]) - GradedPoly.monomial(power)


def cp_poincare(n: int) -> PoincarePoly:
    """Poincare polynomial of complex projective space CP^n."""
    if n < 0:
        raise DomainError(f"CP^{n} needs n >= 0")
    return PoincarePoly([1 if d % 2 == 0 else 0 for d in range(2 * n + 1)])


@functools.lru_cache(maxsize=None)
def _gauss(r: int, k: int) -> tuple[int, ...]:
    if k == 0 or k == r:
        return (1,)
    # [r, k] = [r-1, k] + q^(r-k) [r-1, k-1]
    left = GradedPoly(_gauss(r - 1, k))
    right = GradedPoly(_gauss(r - 1, k - 1)).shift(2 * (r - k))
    return (left + right).coeffs


def gauss_binomial(r: int, k: int) -> PoincarePoly:
    """Gaussian binomial ``[r choose k]`` in ``q = t^2``: the Poincare polynomial of G_k(C^r)."""
    if r < 0 or k < 0 or k > r:
        raise DomainError(f"need 0 <= k <= r, got r={r}, k={k}")
    return PoincarePoly(_gauss(r, k))


def quadric_poincare(m: int) -> PoincarePoly:
    """Poincare polynomial of the oriented real Grassmannian of 2-planes in R^(m+2).

    It is the complex quadric of complex dimension m; for even m the middle
    Betti number is 2.
    """
    if m < 1:
        raise DomainError(f"quadric needs m >= 1, got {m}")
    p = cp_poincare(m)
    if m % 2 == 0:
        p = p + GradedPoly.monomial(m)
    return p.as_poincare()


def connected_sum_cp_poincare(k: int) -> PoincarePoly:
    """Poincare polynomial of CP^k # conj(CP^k), k >= 1."""
    if k < 1:
        raise DomainError(f"need k >= 1, got {k}")
    extra = GradedPoly([1 if (d % 2 == 0 and 0 < d < 2 * k) else 0 for d in range(2 * k)])
    return (cp_poincare(k) + extra).as_poincare()


def is_palindromic(p: GradedPoly, top_degree: int) -> bool:
    """Poincare-duality symmetry ``b_d == b_{top-d}``."""
    if p.degree > top_degree or top_degree < 0:
        return False
    return all(p[d] == p[top_degree - d] for d in range(top_degree + 1))
