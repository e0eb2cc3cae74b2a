"""Duistermaat-Heckman lines of cohomology classes, in exact rational arithmetic.

Second cohomology is modelled as a formal rational vector space on a list of
labelled basis classes.  No relations between basis classes are imposed.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegeneratePath, DegenerateSamples, OutOfDomain, SizeMismatch, ZeroOmega

__all__ = [
    "H2Class",
    "DHPath",
    "dh_class_at",
    "euler_from_slope",
    "omega0_from_lengths",
    "polygon_basis",
    "polygon_class",
    "linear_dependence",
    "scale_factor",
]


@dataclass(frozen=True)
class H2Class:
    basis: tuple[str, ...]
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))
        if len(set(self.basis)) != len(self.basis):
            raise SizeMismatch(f"basis labels must be distinct: {self.basis}")
        if len(self.coords) != len(self.basis):
            raise SizeMismatch(f"{len(self.coords)} coordinates for {len(self.basis)} basis labels")

    @classmethod
    def zero(cls, basis: Sequence[str]) -> H2Class:
        return cls(tuple(basis), (0,) * len(basis))

    @classmethod
    def unit(cls, basis: Sequence[str], label: str) -> H2Class:
        basis = tuple(basis)
        return cls(basis, tuple(1 if b == label else 0 for b in basis))

    def _check(self, other: H2Class):
        if self.basis != other.basis:
            raise SizeMismatch(f"basis mismatch: {self.basis} vs {other.basis}")

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: H2Class) -> H2Class:
        self._check(other)
        return H2Class(self.basis, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: H2Class) -> H2Class:
        self._check(other)
        return H2Class(self.basis, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, s) -> H2Class:
        s = Fraction(s)
        return H2Class(self.basis, tuple(s * c for c in self.coords))

    __rmul__ = __mul__

    def __truediv__(self, s) -> H2Class:
        return self * (1 / Fraction(s))

    def to_dict(self) -> dict:
        return {"basis": list(self.basis), "coords": [str(c) for c in self.coords]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> H2Class:
        return cls(tuple(data["basis"]), tuple(Fraction(c) for c in data["coords"]))

    @classmethod
    def from_json(cls, text: str) -> H2Class:
        return cls.from_dict(json.loads(text))

    def __str__(self):
        terms = [f"{c}*{b}" for b, c in zip(self.basis, self.coords) if c]
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class DHPath:
    """``lam -> base + lam * slope`` on ``[0, ell]``; ``slope`` is the Euler class."""

    base: H2Class
    slope: H2Class
    ell: Fraction

    def __post_init__(self):
        object.__setattr__(self, "ell", Fraction(self.ell))
        self.base._check(self.slope)
        if self.ell <= 0:
            raise OutOfDomain(f"path length must be positive, got {self.ell}")


def dh_class_at(path: DHPath, lam) -> H2Class:
    lam = Fraction(lam)
    if not 0 <= lam <= path.ell:
        raise OutOfDomain(f"lambda={lam} outside [0, {path.ell}]")
    return path.base + lam * path.slope


def euler_from_slope(c1: H2Class, lam1, c2: H2Class, lam2) -> H2Class:
    """Derivative in lambda of an affine class path sampled at two levels."""
    lam1, lam2 = Fraction(lam1), Fraction(lam2)
    if lam1 == lam2:
        raise DegenerateSamples(f"both samples taken at lambda={lam1}")
    return (c2 - c1) / (lam2 - lam1)


def polygon_basis(n: int, start: int = 1) -> tuple[str, ...]:
    return tuple(f"e(xi_{i})" for i in range(start, start + n))


def omega0_from_lengths(alpha: Sequence, basis: Sequence[str] | None = None) -> H2Class:
    """Reduced class ``sum_i alpha_i e(xi_i)`` of a polygon space."""
    values = [Fraction(a) for a in getattr(alpha, "alpha", alpha)]
    if basis is None:
        basis = polygon_basis(len(values))
    if len(basis) != len(values):
        raise SizeMismatch(f"{len(values)} lengths for {len(basis)} basis labels")
    return H2Class(tuple(basis), tuple(values))


def polygon_class(alpha: Sequence, j: int, lam, basis: Sequence[str] | None = None) -> H2Class:
    """Class of the reduced space at ``alpha(j, lam)`` (edge ``j``, 1-based, lengthened by ``lam``).

    Entries are not re-sorted so that each coordinate keeps its edge label.
    """
    values = [Fraction(a) for a in getattr(alpha, "alpha", alpha)]
    if not 1 <= j <= len(values):
        raise SizeMismatch(f"edge index {j} outside 1..{len(values)}")
    values[j - 1] += Fraction(lam)
    return omega0_from_lengths(values, basis)


def linear_dependence(omega0: H2Class, e: H2Class) -> Fraction | None:
    """``s`` with ``e == s * omega0``, or None when the two are independent."""
    omega0._check(e)
    if omega0.is_zero():
        raise ZeroOmega("the reference class is zero")
    i = next(k for k, c in enumerate(omega0.coords) if c)
    s = e.coords[i] / omega0.coords[i]
    return s if e == s * omega0 else None


def scale_factor(s, ell) -> Fraction:
    """``1 + s * ell``, after checking ``1 + lam * s > 0`` on all of ``[0, ell]``."""
    s, ell = Fraction(s), Fraction(ell)
    if ell <= 0:
        raise OutOfDomain(f"ell must be positive, got {ell}")
    end = 1 + s * ell
    # affine in lam, so the endpoints decide
    if end <= 0:
        raise DegeneratePath(f"1 + lam*s vanishes on [0, {ell}] (s={s})")
    return end
