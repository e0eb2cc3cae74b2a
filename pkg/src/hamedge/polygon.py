"""Exact combinatorics of polygon-space length vectors.

Length vectors hold positive :class:`fractions.Fraction` entries kept in
nondecreasing order.  Indices passed to the functions here follow the vector's
own convention: 1-based by default, 0-based for vectors built by
:func:`add_tiny_edge` (the tiny edge is index 0).

Genericity is a zero test on the signed sums ``sum(eps_i * alpha_i)``,
``eps_i = +-1``.  Instead of walking all ``2^(n-1)`` sign vectors we scale to
integers and run a meet-in-the-middle search over subset sums, which is
exact and handles ``n = 30`` in well under a second.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BadIndices, NonPositiveLength, NotGeneric, NotTiny, TooLarge

__all__ = [
    "MAX_EDGES",
    "LengthVector",
    "ChamberResult",
    "Interval",
    "as_lengths",
    "parse_lengths",
    "is_generic",
    "genericity_margin",
    "perturb",
    "add_tiny_edge",
    "chamber_cpn",
    "chamber_cut",
    "phi_image_analytic",
]

MAX_EDGES = 30


@dataclass(frozen=True)
class LengthVector:
    alpha: tuple[Fraction, ...]
    zero_indexed: bool = False

    def __post_init__(self):
        vals = tuple(Fraction(a) for a in self.alpha)
        if any(a <= 0 for a in vals):
            raise NonPositiveLength(f"lengths must be positive: {[str(a) for a in vals]}")
        object.__setattr__(self, "alpha", tuple(sorted(vals)))

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def origin(self) -> int:
        return 0 if self.zero_indexed else 1

    def __len__(self):
        return len(self.alpha)

    def __iter__(self):
        return iter(self.alpha)

    def __getitem__(self, i: int) -> Fraction:
        """Entry ``i`` in this vector's own index convention."""
        return self.alpha[self.pos(i)]

    def pos(self, i: int) -> int:
        k = i - self.origin
        if not 0 <= k < len(self.alpha):
            raise BadIndices(f"index {i} outside {self.origin}..{self.origin + len(self.alpha) - 1}")
        return k

    def as_floats(self) -> list[float]:
        return [float(a) for a in self.alpha]

    def __str__(self):
        return "(" + ",".join(str(a) for a in self.alpha) + ")"


def as_lengths(alpha, zero_indexed: bool | None = None) -> LengthVector:
    if isinstance(alpha, LengthVector):
        if zero_indexed is None or zero_indexed == alpha.zero_indexed:
            return alpha
        return LengthVector(alpha.alpha, zero_indexed)
    return LengthVector(tuple(alpha), bool(zero_indexed))


def parse_lengths(text: str, zero_indexed: bool = False) -> LengthVector:
    """Parse ``"1/4,1,1,1,2"`` or ``"0.25,1,1.5"`` into exact rationals."""
    tokens = [tok.strip() for tok in text.split(",") if tok.strip()]
    if not tokens:
        raise ValueError("empty length vector")
    return LengthVector(tuple(Fraction(tok) for tok in tokens), zero_indexed)


def _integer_scaled(values: Sequence[Fraction]) -> tuple[list[int], int]:
    den = math.lcm(*(v.denominator for v in values))
    return [int(v * den) for v in values], den


def _subset_sums(items: Iterable[int]) -> list[int]:
    sums = [0]
    for x in items:
        sums = sums + [s + x for s in sums]
    return sums


def _min_signed_sum(values: Sequence[Fraction]) -> Fraction:
    """``min |sum eps_i v_i|`` over all sign vectors, exactly."""
    ints, den = _integer_scaled(values)
    total = sum(ints)
    # signed sum = total - 2 * (sum of the subset taking the minus sign)
    half = len(ints) // 2
    left = _subset_sums(ints[:half])
    right = sorted(set(_subset_sums(ints[half:])))
    best = None
    for s in set(left):
        # want s + r as close as possible to total / 2, i.e. 2(s + r) close to total
        k = bisect.bisect_left(right, (total - 2 * s) // 2)
        for r in right[max(k - 1, 0):k + 2]:
            d = abs(total - 2 * (s + r))
            if best is None or d < best:
                best = d
                if best == 0:
                    return Fraction(0)
    return Fraction(best, den)


def _check_size(values):
    if len(values) > MAX_EDGES:
        raise TooLarge(f"{len(values)} edges exceeds the enumeration cap of {MAX_EDGES}")


def is_generic(alpha) -> bool:
    """True iff no choice of signs makes ``sum(eps_i * alpha_i)`` vanish."""
    values = [Fraction(a) for a in alpha]
    _check_size(values)
    return _min_signed_sum(values) != 0


def genericity_margin(alpha) -> Fraction:
    """Smallest ``|sum(eps_i * alpha_i)|``.

    Changing one entry by ``delta`` moves every signed sum by ``|delta|`` at
    most, so any ``eps`` strictly below the margin is tiny for ``alpha``.
    """
    values = [Fraction(a) for a in alpha]
    _check_size(values)
    margin = _min_signed_sum(values)
    if margin == 0:
        raise NotGeneric(f"{[str(v) for v in values]} admits a degenerate (aligned) configuration")
    return margin


def perturb(alpha, j: int, delta) -> LengthVector:
    """``alpha(j, delta)``: entry ``j`` shifted by ``delta``, re-sorted."""
    lv = as_lengths(alpha)
    k = lv.pos(j)
    vals = list(lv.alpha)
    vals[k] += Fraction(delta)
    if vals[k] <= 0:
        raise NonPositiveLength(f"alpha_{j} + delta = {vals[k]} is not positive")
    return LengthVector(tuple(vals), lv.zero_indexed)


def add_tiny_edge(alpha, eps) -> LengthVector:
    """``(eps, alpha_1, ..., alpha_n)`` indexed from 0; ``eps`` must be tiny for ``alpha``."""
    lv = as_lengths(alpha)
    eps = Fraction(eps)
    if eps <= 0:
        raise NotTiny(f"eps must be positive, got {eps}")
    margin = genericity_margin(lv.alpha)
    if eps >= margin:
        raise NotTiny(f"eps={eps} is not below the genericity margin {margin}")
    if eps > lv.alpha[0]:
        raise NotTiny(f"eps={eps} exceeds the shortest edge {lv.alpha[0]}")
    return LengthVector((eps,) + lv.alpha, zero_indexed=True)


@dataclass(frozen=True)
class ChamberResult:
    kind: str  # "CPn3" | "CutOfCPn2" | "Unclassified" | "NonGeneric"
    ell: Fraction | None = None
    slice_size: Fraction | None = None
    detail: str = ""
    model: str = ""
    diffeo_type: str = ""

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "ell": None if self.ell is None else str(self.ell),
            "slice_size": None if self.slice_size is None else str(self.slice_size),
            "detail": self.detail,
            "model": self.model,
            "diffeo_type": self.diffeo_type,
        }


def _cpn_inequalities(a: Sequence[Fraction]) -> tuple[bool, bool]:
    # a = (a_1, ..., a_n), 0-based list
    first = a[-1] < sum(a[:-1])
    second = a[-1] + a[0] > sum(a[1:-1])
    return first, second


def chamber_cpn(alpha) -> ChamberResult:
    """Chamber where pol(alpha) is symplectomorphic to ``(CP^(n-3))_ell``.

    The chamber is ``a_n < a_1 + ... + a_(n-1)`` and ``a_n + a_1 > a_2 + ... + a_(n-1)``,
    with ``ell = a_1 + ... + a_(n-1) - a_n``.
    """
    lv = as_lengths(alpha)
    a = lv.alpha
    if len(a) < 4:
        raise BadIndices(f"need at least 4 edges, got {len(a)}")
    if not is_generic(a):
        raise NotGeneric(f"{lv} is not generic")
    first, second = _cpn_inequalities(a)
    if not (first and second):
        return ChamberResult("Unclassified", detail=f"{lv}: inequalities (longest < rest, longest + shortest > middle) = ({first}, {second})")
    ell = sum(a[:-1]) - a[-1]
    n = len(a)
    return ChamberResult(
        "CPn3",
        ell=ell,
        detail=f"{lv}: bending flow along the two longest edges has image of length {ell}",
        model=f"(CP^{n - 3})_{ell}",
        diffeo_type=f"CP^{n - 3}",
    )


def chamber_cut(alpha0n) -> ChamberResult:
    """Chamber where pol(alpha) is a symplectic cut of ``(CP^(n-2))_ell`` (0-indexed input).

    Conditions: ``a_n + a_0 < a_0 + ... + a_(n-1)`` and ``a_n + a_1 > a_2 + ... + a_(n-1)``;
    ``ell = a_0 + ... + a_(n-1) - a_n`` and the slice has size ``ell - 2 a_0``.  The
    vector is also required to be ``beta`` with a tiny edge ``a_0`` added, ``beta`` in the
    CP^(n-3) chamber.
    """
    lv = as_lengths(alpha0n, zero_indexed=True)
    a = lv.alpha
    if len(a) < 5:
        raise BadIndices(f"need at least 5 edges (indices 0..n, n >= 4), got {len(a)}")
    if not is_generic(a):
        raise NotGeneric(f"{lv} is not generic")
    a0, beta = a[0], a[1:]
    first = beta[-1] + a0 < sum(a[:-1])
    second = beta[-1] + beta[0] > sum(beta[1:-1])
    if not (first and second):
        return ChamberResult("Unclassified", detail=f"{lv}: inequalities = ({first}, {second})")
    if not is_generic(beta):
        return ChamberResult("Unclassified", detail=f"{lv}: the vector without edge 0, {_vec_str(beta)}, is not generic")
    margin = genericity_margin(beta)
    if a0 >= margin:
        return ChamberResult("Unclassified", detail=f"{lv}: edge 0 = {a0} is not tiny (margin {margin})")
    if not all(_cpn_inequalities(beta)):
        return ChamberResult("Unclassified", detail=f"{lv}: {_vec_str(beta)} is outside the CP^(n-3) chamber")
    ell = sum(a[:-1]) - a[-1]
    n = len(a) - 1
    return ChamberResult(
        "CutOfCPn2",
        ell=ell,
        slice_size=ell - 2 * a0,
        detail=f"{lv}: tiny edge {a0} added to {_vec_str(beta)} (margin {margin})",
        model=f"cut of (CP^{n - 2})_{ell}, slice size {ell - 2 * a0}",
        diffeo_type=f"CP^{n - 2} # conj(CP^{n - 2})",
    )


def _vec_str(values) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    @property
    def empty(self) -> bool:
        return self.lo > self.hi

    @property
    def length(self) -> Fraction:
        return max(self.hi - self.lo, Fraction(0))

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def to_dict(self) -> dict:
        return {"lo": str(self.lo), "hi": str(self.hi), "empty": self.empty}


def phi_image_analytic(alpha, i: int, j: int) -> Interval:
    """Exact range of ``|rho_i + rho_j|`` over closed polygons with side lengths ``alpha``.

    ``rho_i + rho_j`` must be realisable both by the pair (``||a_i - a_j|| <= d <= a_i + a_j``)
    and, reversed, by the complementary chain (``2 max - sum <= d <= sum``).
    """
    lv = as_lengths(alpha)
    if i == j:
        raise BadIndices("i and j must differ")
    pi, pj = lv.pos(i), lv.pos(j)
    if lv.n < 3:
        raise BadIndices(f"need at least 3 edges, got {lv.n}")
    ai, aj = lv.alpha[pi], lv.alpha[pj]
    rest = [a for k, a in enumerate(lv.alpha) if k not in (pi, pj)]
    lo = max(abs(ai - aj), 2 * max(rest) - sum(rest))
    hi = min(ai + aj, sum(rest))
    return Interval(lo, hi)

