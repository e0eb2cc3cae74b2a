"""Poincare-polynomial constraints for simple Hamiltonian manifolds.

A simple Hamiltonian manifold ``(M, M0, M1)`` is a closed symplectic manifold
with a Hamiltonian torus action whose fixed set has exactly two components.
Writing ``P, P0, P1`` for the Poincare polynomials and ``2 r_i`` for the
codimension of ``M_i``, the residual moment map is a perfect Morse-Bott
function, which gives::

    P = P0 + t^(2 r1) P1
    P = t^(2 r0) P0 + P1

Everything here is a consequence of those two equalities plus the fact that
``M``, ``M0`` and ``M1`` are closed symplectic manifolds.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, NotRealizable, NotSymplectic, ZeroDirection
from .polyalg import (
    GradedPoly,
    PoincarePoly,
    cp_poincare,
    gauss_binomial,
    is_palindromic,
    one_minus_t,
    poly_exact_div,
    quadric_poincare,
)

__all__ = [
    "SimpleTriple",
    "Character",
    "Check",
    "CheckReport",
    "solve_triple",
    "suite_check",
    "product_with",
    "weight_cut_model",
    "grassmann_triple",
    "cp_triple",
    "quadric_triple",
    "sphere_triple",
    "residual_character",
    "symplectic_defect",
]


@dataclass(frozen=True)
class SimpleTriple:
    """Cohomological shadow ``(P0, P1, P, r0, r1)`` of a simple Hamiltonian manifold.

    Half-dimensions are derived: ``m0`` from the degree of ``p0``, ``m = m0 + r0``
    and ``m1 = m - r1``.
    """

    p0: PoincarePoly
    p1: PoincarePoly
    p: PoincarePoly
    r0: int
    r1: int
    label: str | None = None

    def __post_init__(self):
        for name in ("p0", "p1", "p"):
            val = getattr(self, name)
            if not isinstance(val, PoincarePoly):
                object.__setattr__(self, name, GradedPoly(val).as_poincare())
        if self.r0 < 1 or self.r1 < 1:
            raise DomainError(f"half-codimensions must be positive, got r0={self.r0}, r1={self.r1}")
        if self.p0.is_zero():
            raise DomainError("P0 is the zero polynomial")

    @property
    def m0(self) -> int:
        return self.p0.degree // 2

    @property
    def m(self) -> int:
        return self.m0 + self.r0

    @property
    def m1(self) -> int:
        return self.m - self.r1

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "p0": self.p0.to_json(),
            "p1": self.p1.to_json(),
            "p": self.p.to_json(),
            "r0": self.r0,
            "r1": self.r1,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> SimpleTriple:
        return cls(
            p0=PoincarePoly(data["p0"]),
            p1=PoincarePoly(data["p1"]),
            p=PoincarePoly(data["p"]),
            r0=int(data["r0"]),
            r1=int(data["r1"]),
            label=data.get("label"),
        )

    @classmethod
    def from_json(cls, text: str) -> SimpleTriple:
        return cls.from_dict(json.loads(text))


def symplectic_defect(p: GradedPoly, m: int) -> int | None:
    """First even degree ``2k <= 2m`` with vanishing Betti number, or None.

    On a closed symplectic 2m-manifold every power of the symplectic class up
    to ``m`` is nonzero.
    """
    for k in range(m + 1):
        if p[2 * k] < 1:
            return 2 * k
    return None


def solve_triple(
    p0: GradedPoly | Sequence[int],
    r0: int,
    r1: int,
    *,
    symplectic: bool = True,
    label: str | None = None,
) -> SimpleTriple:
    """Recover ``P1`` and ``P`` from ``P0`` and the two half-codimensions.

    Solves ``(1 - t^(2 r1)) P1 = (1 - t^(2 r0)) P0`` and
    ``(1 - t^(2 r1)) P = (1 - t^(2 (r0 + r1))) P0`` by exact division.

    Raises NotDivisible or NegativeBetti when no such ``P1``/``P`` exist.  With
    ``symplectic=True`` (default) also raises NotSymplectic when one of the
    three would lack a nonzero Betti number in some even degree up to its
    dimension; pass ``symplectic=False`` for the bare division solver.
    """
    p0 = GradedPoly(p0).as_poincare()
    if p0.is_zero():
        raise DomainError("P0 is the zero polynomial")
    if r0 < 1 or r1 < 1:
        raise DomainError(f"half-codimensions must be positive, got r0={r0}, r1={r1}")
    den = one_minus_t(2 * r1)
    p1 = poly_exact_div(one_minus_t(2 * r0) * p0, den).as_poincare()
    p = poly_exact_div(one_minus_t(2 * (r0 + r1)) * p0, den).as_poincare()
    triple = SimpleTriple(p0, p1, p, r0, r1, label)
    if symplectic:
        for name, poly, half in (("P0", p0, triple.m0), ("P1", p1, triple.m1), ("P", p, triple.m)):
            if half < 0:
                raise NotRealizable(f"{name} would have negative dimension")
            bad = symplectic_defect(poly, half)
            if bad is not None:
                raise NotSymplectic(f"{name} = {poly} has b_{bad} = 0 below its top degree {2 * half}")
    return triple


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # "pass" | "fail" | "warn"
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass(frozen=True)
class CheckReport:
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == "fail"]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __iter__(self):
        return iter(self.checks)

    def to_list(self) -> list[dict]:
        return [c.to_dict() for c in self.checks]

    def to_json(self) -> str:
        return json.dumps(self.to_list())


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def suite_check(t: SimpleTriple) -> CheckReport:
    """Run every Poincare-polynomial consequence on ``t``.  Never raises."""
    p0, p1, p, r0, r1 = t.p0, t.p1, t.p, t.r0, t.r1
    m0, m1, m = t.m0, t.m1, t.m
    checks = []

    def add(name, ok, detail=""):
        checks.append(Check(name, ok if isinstance(ok, str) else _status(ok), detail))

    rhs0 = p0 + p1.shift(2 * r1)
    add("morse_bott_0", p == rhs0, f"P={p}, P0+t^{2 * r1}P1={rhs0}")
    rhs1 = p0.shift(2 * r0) + p1
    add("morse_bott_1", p == rhs1, f"P={p}, t^{2 * r0}P0+P1={rhs1}")

    den = one_minus_t(2 * r1)
    lhs, rhs = den * p1, one_minus_t(2 * r0) * p0
    add("division_p1", lhs == rhs, f"(1-t^{2 * r1})P1={lhs}, (1-t^{2 * r0})P0={rhs}")
    lhs, rhs = den * p, one_minus_t(2 * (r0 + r1)) * p0
    add("division_p", lhs == rhs, f"(1-t^{2 * r1})P={lhs}, (1-t^{2 * (r0 + r1)})P0={rhs}")

    degs_ok = (p1.degree // 2 == m1) and (p.degree // 2 == m) and m1 >= 0
    add("codim_bookkeeping", degs_ok, f"m={m}, m0={m0}, m1={m1}, deg P1={p1.degree}, deg P={p.degree}")

    add("dim_bound", m <= m0 + m1 + 1, f"m={m}, m0+m1+1={m0 + m1 + 1}")
    add("h1_equal", p0[1] == p1[1] == p[1], f"b1: P0={p0[1]}, P1={p1[1]}, P={p[1]}")
    odd = (p0.has_odd(), p1.has_odd(), p.has_odd())
    add("odd_parity", len(set(odd)) == 1, f"odd cohomology present (P0, P1, P) = {odd}")
    if r0 == r1:
        add("equal_codim", p0 == p1, f"r0=r1={r0}: P0={p0}, P1={p1}")
    else:
        add("equal_codim", "pass", "r0 != r1, not applicable")

    dual = {
        "P0": is_palindromic(p0, 2 * m0),
        "P1": is_palindromic(p1, 2 * m1),
        "P": is_palindromic(p, 2 * m),
    }
    add("duality", all(dual.values()), ", ".join(f"{k} {'ok' if v else 'asymmetric'}" for k, v in dual.items()))

    if p == cp_poincare(m):
        ok = m1 >= 0 and m0 + m1 + 1 == m and p0 == cp_poincare(m0) and p1 == cp_poincare(m1)
        add("cp_recognizer", ok, f"P = P(CP^{m}); P0={p0}, P1={p1}, m0+m1+1={m0 + m1 + 1}")
    else:
        add("cp_recognizer", "pass", "P is not the Poincare polynomial of CP^m, not applicable")

    if m == m0 + m1 + 1:
        ok = p in (cp_poincare(m), quadric_poincare(m))
        add("extremal_flag", "pass" if ok else "warn",
            f"extremal case m=m0+m1+1={m}; expected P(CP^{m}) or P(quadric_{m}), got {p}")
    else:
        add("extremal_flag", "pass", "not extremal")

    if r0 == 1 or r1 == 1:
        detail = "weight simple: a fixed component has codimension 2"
    elif m == m0 + m1 + 1 and m0 != m1:
        detail = "weight simple: extremal with dim M0 != dim M1"
    else:
        detail = "weight simplicity not guaranteed by this data"
    add("weight_flag", "pass", detail)

    return CheckReport(tuple(checks))


def product_with(t: SimpleTriple, q: GradedPoly | Sequence[int], label: str | None = None) -> SimpleTriple:
    """Cohomology of ``M x N`` with ``T`` acting on the first factor only."""
    q = GradedPoly(q).as_poincare()
    if q.is_zero() or q.degree % 2:
        raise DomainError(f"second factor must have even top degree, got {q}")
    if label is None and t.label:
        label = f"{t.label} x [{q}]"
    return SimpleTriple((t.p0 * q).as_poincare(), (t.p1 * q).as_poincare(), (t.p * q).as_poincare(),
                        t.r0, t.r1, label)


def weight_cut_model(p0: GradedPoly | Sequence[int], r0: int, label: str | None = None) -> SimpleTriple:
    """Symplectic cut of a rank-``r0`` weight bundle over ``M0``.

    ``M`` is a CP^r0-bundle over ``M0`` and ``M1`` the projectivised bundle, so
    additively ``P = P0 * P(CP^r0)`` and ``P1 = P0 * P(CP^(r0-1))`` with ``r1 = 1``.
    """
    p0 = GradedPoly(p0).as_poincare()
    if r0 < 1:
        raise DomainError(f"bundle rank must be positive, got {r0}")
    if label is None:
        label = f"C_chi(M0, nu0, ell) rank {r0} over [{p0}]"
    return SimpleTriple(p0, (p0 * cp_poincare(r0 - 1)).as_poincare(), (p0 * cp_poincare(r0)).as_poincare(),
                        r0, 1, label)


def grassmann_triple(r: int, k: int) -> SimpleTriple:
    """G_k(C^r) with the last coordinate circle.

    Fixed components are Grassmannians of C^(r-1); they are assigned so that
    ``m = m_i + r_i`` holds, giving ``P0 = [r-1, k]`` with ``r0 = k`` and
    ``P1 = [r-1, k-1]`` with ``r1 = r - k``.
    """
    if r < 2 or not 1 <= k <= r - 1:
        raise DomainError(f"need r >= 2 and 1 <= k <= r-1, got r={r}, k={k}")
    return SimpleTriple(gauss_binomial(r - 1, k), gauss_binomial(r - 1, k - 1), gauss_binomial(r, k),
                        k, r - k, f"G_{k}(C^{r})")


def cp_triple(n: int, k: int) -> SimpleTriple:
    """CP^n with the circle rotating the first k+1 coordinates: (CP^n, CP^k, CP^(n-k-1))."""
    if not 0 <= k <= n - 1:
        raise DomainError(f"need 0 <= k <= n-1, got n={n}, k={k}")
    return SimpleTriple(cp_poincare(k), cp_poincare(n - k - 1), cp_poincare(n), n - k, k + 1,
                        f"(CP^{n}, CP^{k}, CP^{n - k - 1})")


def quadric_triple(m: int) -> SimpleTriple:
    """Oriented Grassmannian of 2-planes in R^(m+2) (complex quadric of dimension m).

    The circle acts on ``C^(m+2) = W + conj(W) (+ C)`` with weights 1, -1 (, 0)
    for a maximal isotropic ``W``; both fixed components are ``P(W) = CP^j``
    with ``j = floor(m/2)``.
    """
    if m < 1:
        raise DomainError(f"need m >= 1, got {m}")
    j = m // 2
    return SimpleTriple(cp_poincare(j), cp_poincare(j), quadric_poincare(m), m - j, m - j,
                        f"G~_2(R^{m + 2})")


def sphere_triple() -> SimpleTriple:
    """S^2 rotated about an axis: two isolated fixed points."""
    return SimpleTriple(PoincarePoly([1]), PoincarePoly([1]), cp_poincare(1), 1, 1, "S^2")


@dataclass(frozen=True)
class Character:
    """Element of the weight lattice Hom(T, S^1), as an integer vector."""

    components: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(int(c) for c in self.components))
        if not self.components or all(c == 0 for c in self.components):
            raise ZeroDirection("a character must be nonzero")

    @property
    def primitive(self) -> bool:
        return math.gcd(*self.components) == 1

    def __neg__(self):
        return Character(tuple(-c for c in self.components))


def residual_character(direction: Sequence) -> tuple[Character, Fraction]:
    """Primitive character ``chi`` and scale ``lam > 0`` with ``direction = lam * chi``.

    ``direction`` is typically ``Phi(M1) - Phi(M0)`` in weight-lattice coordinates.
    """
    vals = [Fraction(x) for x in direction]
    if not vals or all(v == 0 for v in vals):
        raise ZeroDirection("direction must be nonzero")
    denom = math.lcm(*(v.denominator for v in vals))
    ints = [int(v * denom) for v in vals]
    g = math.gcd(*ints)
    chi = Character(tuple(x // g for x in ints))
    return chi, Fraction(g, denom)
