"""Generated catalogue of simple Hamiltonian manifolds and polygon-space chambers.

Every entry is produced by a generator function; nothing is typed in by hand.
:func:`run_catalog` re-derives each entry through an independent route and
records one :class:`~hamedge.report.CheckRecord` per identity checked.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import bending, dhline, polygon
from .errors import HamEdgeError
from .polyalg import GradedPoly, connected_sum_cp_poincare, cp_poincare
from .report import IntervalPlot, Report
from .simpleham import (
    SimpleTriple,
    cp_triple,
    grassmann_triple,
    product_with,
    quadric_triple,
    solve_triple,
    sphere_triple,
    suite_check,
    weight_cut_model,
)

__all__ = ["FAMILIES", "CatalogEntry", "build_catalog", "run_catalog", "check_entry"]

FAMILIES = ("cp", "grassmann", "quadric", "sphere", "product", "polygon-cp", "polygon-cut")

DEFAULT_SAMPLES = 4096
INTERVAL_RTOL = 1e-3
CONTAINMENT_SLACK = 1e-9


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    family: str
    parameters: dict
    expected: object  # SimpleTriple for cohomology families, LengthVector for polygon families
    notes: str = ""
    provenance: str = ""
    dim: int = 0  # complex dimension of M
    extra: dict = field(default_factory=dict)


def _triple_entry(name, family, params, triple: SimpleTriple, notes, provenance, **extra) -> CatalogEntry:
    return CatalogEntry(name, family, params, triple, notes, provenance, triple.m, extra)


def build_catalog(max_cp: int = 10, max_grassmann: int = 8, max_quadric: int = 8) -> list[CatalogEntry]:
    entries = []
    for n in range(2, max_cp + 1):
        for k in range(n):
            entries.append(_triple_entry(
                f"cp/n={n:02d}/k={k:02d}", "cp", {"n": n, "k": k}, cp_triple(n, k),
                f"CP^{n} rotating the first {k + 1} homogeneous coordinates", f"cp_triple({n}, {k})"))
    for r in range(2, max_grassmann + 1):
        for k in range(1, r):
            entries.append(_triple_entry(
                f"grassmann/r={r:02d}/k={k:02d}", "grassmann", {"r": r, "k": k}, grassmann_triple(r, k),
                f"G_{k}(C^{r}) with the last coordinate circle; fixed-set labels set by codimension",
                f"grassmann_triple({r}, {k})"))
    for m in range(2, max_quadric + 1):
        entries.append(_triple_entry(
            f"quadric/m={m:02d}", "quadric", {"m": m}, quadric_triple(m),
            f"oriented 2-planes in R^{m + 2}; both fixed sets CP^{m // 2}", f"quadric_triple({m})"))
    entries.append(_triple_entry("sphere", "sphere", {}, sphere_triple(),
                                 "isolated fixed points force M = S^2", "sphere_triple()"))
    products = [
        ("product/sphere x CP1", sphere_triple(), cp_poincare(1)),
        ("product/sphere x CP2", sphere_triple(), cp_poincare(2)),
        ("product/cp(2,0) x CP1", cp_triple(2, 0), cp_poincare(1)),
        ("product/grassmann(4,2) x CP1", grassmann_triple(4, 2), cp_poincare(1)),
        ("product/quadric(3) x CP1", quadric_triple(3), cp_poincare(1)),
    ]
    for name, base, q in products:
        entries.append(_triple_entry(
            name, "product", {"base": base.label, "factor": q.to_json()}, product_with(base, q),
            "torus acts on the first factor only", f"product_with({base.label}, {q})", base=base, factor=q))
    for alpha in ((1, 1, 1, 2), (2, 4, 6, 9), (1, 1, 1, 1, 3)):
        lv = polygon.LengthVector(alpha)
        entries.append(CatalogEntry(
            f"polygon-cp/{lv}", "polygon-cp", {"alpha": [str(a) for a in lv]}, lv,
            "longest edge shorter than the rest, longest + shortest longer than the middle edges",
            f"chamber_cpn({lv})", lv.n - 3))
    for beta, eps in (((1, 1, 1, 2), Fraction(1, 4)),):
        lv = polygon.add_tiny_edge(beta, eps)
        entries.append(CatalogEntry(
            f"polygon-cut/{lv}", "polygon-cut", {"alpha": [str(a) for a in lv], "eps": str(eps)}, lv,
            "tiny edge added to a CP^(n-3)-chamber vector", f"add_tiny_edge({beta}, {eps})", lv.n - 3))
    return entries


def _triple_checks(entry: CatalogEntry, rep: Report):
    t: SimpleTriple = entry.expected
    name = entry.name
    rep.add("simpleham", f"{name}/triple", "pass", None, t.to_dict(), entry.provenance)
    for check in suite_check(t):
        rep.add("simpleham", f"{name}/{check.name}", check.status, "pass", check.detail, entry.provenance)

    # independent route: P1 and P recovered from P0, r0, r1 alone
    try:
        solved = solve_triple(t.p0, t.r0, t.r1)
        same = (solved.p1, solved.p) == (t.p1, t.p)
        rep.add("simpleham", f"{name}/rederive", "pass" if same else "fail",
                {"p1": t.p1.to_json(), "p": t.p.to_json()},
                {"p1": solved.p1.to_json(), "p": solved.p.to_json()}, f"solve_triple({t.p0}, {t.r0}, {t.r1})")
    except HamEdgeError as exc:
        rep.add("simpleham", f"{name}/rederive", "fail", t.to_dict(), f"{type(exc).__name__}: {exc}",
                f"solve_triple({t.p0}, {t.r0}, {t.r1})")

    if entry.family == "quadric" and entry.parameters["m"] in (3, 5):
        j = (entry.parameters["m"] - 1) // 2
        ok = t.p0 == cp_poincare(j) and t.p1 == cp_poincare(j)
        rep.add("simpleham", f"{name}/fixed_sets_projective", "pass" if ok else "fail",
                cp_poincare(j).to_json(), [t.p0.to_json(), t.p1.to_json()], "T^2 / T^3 moment polytope picture")
    if entry.family == "grassmann":
        r, k = entry.parameters["r"], entry.parameters["k"]
        rep.add("simpleham", f"{name}/pascal", "pass" if t.p == t.p0 + t.p1.shift(2 * (r - k)) else "fail",
                t.p.to_json(), (t.p0 + t.p1.shift(2 * (r - k))).to_json(), "q-Pascal identity")
    if entry.family == "sphere":
        rep.add("simpleham", f"{name}/is_S2", "pass" if t.p == cp_poincare(1) else "fail",
                cp_poincare(1).to_json(), t.p.to_json(), "Morse function with two critical points")
    if entry.family == "product":
        base, q = entry.extra["base"], entry.extra["factor"]
        ok = suite_check(base).ok and t.p == base.p * q
        rep.add("simpleham", f"{name}/factorises", "pass" if ok else "fail",
                (base.p * q).to_json(), t.p.to_json(), entry.provenance)


def _rel_close(est: float, exact: Fraction, scale: Fraction) -> bool:
    ref = abs(exact) if exact != 0 else scale
    return abs(est - float(exact)) <= INTERVAL_RTOL * float(ref)


def _interval_checks(rep: Report, name: str, lv, i: int, j: int, samples: int, seed: int,
                     expected_length: Fraction, provenance: str):
    exact = polygon.phi_image_analytic(lv, i, j)
    rep.add("polygon", f"{name}/phi_{i}{j}/analytic_length", "pass" if exact.length == expected_length else "fail",
            str(expected_length), str(exact.length), provenance)
    est = bending.estimate_phi_image(lv, i, j, samples, seed)
    ok = _rel_close(est.lo, exact.lo, exact.length) and _rel_close(est.hi, exact.hi, exact.length)
    rep.add("bending", f"{name}/phi_{i}{j}/sampled_interval", "pass" if ok else "fail",
            [str(exact.lo), str(exact.hi)], [round(est.lo, 9), round(est.hi, 9)],
            f"estimate_phi_image(samples={samples}, seed={seed}), rtol={INTERVAL_RTOL}")
    inside = est.lo >= float(exact.lo) - CONTAINMENT_SLACK and est.hi <= float(exact.hi) + CONTAINMENT_SLACK
    rep.add("bending", f"{name}/phi_{i}{j}/within_analytic", "pass" if inside else "fail",
            "sampled range inside analytic range", [round(est.lo, 9), round(est.hi, 9)], "closure constraints")
    rep.intervals.append(IntervalPlot(f"{name} phi_{i},{j}", est.lo, est.hi, float(exact.lo), float(exact.hi)))


def _polygon_cp_checks(entry: CatalogEntry, rep: Report, samples: int, seed: int):
    lv = polygon.as_lengths(entry.expected)
    a, n, name = lv.alpha, lv.n, entry.name
    rep.add("polygon", f"{name}/generic", "pass" if polygon.is_generic(a) else "fail", True, polygon.is_generic(a),
            "exact signed-sum search")
    res = polygon.chamber_cpn(lv)
    ell = sum(a[:-1]) - a[-1]
    rep.add("polygon", f"{name}/chamber", "pass" if res.kind == "CPn3" and res.ell == ell else "fail",
            {"kind": "CPn3", "ell": str(ell)}, res.to_dict(), entry.provenance)
    chain = a[-1] - a[-2] > sum(a[1:-2]) - a[0] and (n == 4 or sum(a[1:-2]) - a[0] > 0)
    rep.add("polygon", f"{name}/chain_inequality", "pass" if chain else "fail", True, chain,
            "a_n - a_(n-1) > a_2 + ... + a_(n-2) - a_1 > 0")
    _interval_checks(rep, name, lv, n, n - 1, samples, seed, ell, "length equals ell")

    # no critical points of phi_(n, n-1) strictly inside the image
    rho = bending.sample_configs(lv, min(samples, 2048), seed + 1)
    exact = polygon.phi_image_analytic(lv, n, n - 1)
    bad = 0
    for r in rho:
        c = bending.Config(r, lv.as_floats())
        val = bending.phi(c, n, n - 1)
        if float(exact.lo) + 1e-3 < val < float(exact.hi) - 1e-3 and bending.is_critical(c, n, n - 1, 1e-6):
            bad += 1
    rep.add("bending", f"{name}/no_interior_critical", "pass" if bad == 0 else "fail", 0, bad,
            f"sampled {len(rho)} configurations")

    # (M, M0, M1) = (CP^(n-3), CP^(n-4), point) as a weight-bundle cut over a point
    t = weight_cut_model(GradedPoly([1]), n - 3, label=f"pol{lv}")
    ok = t.p == cp_poincare(n - 3) and suite_check(t).ok
    rep.add("simpleham", f"{name}/cohomology", "pass" if ok else "fail", cp_poincare(n - 3).to_json(),
            t.p.to_json(), f"weight_cut_model(1, {n - 3})")


def _polygon_cut_checks(entry: CatalogEntry, rep: Report, samples: int, seed: int):
    lv = polygon.as_lengths(entry.expected, zero_indexed=True)
    a, name = lv.alpha, entry.name
    n = lv.n - 1  # indices 0..n
    eps, beta = a[0], a[1:]
    res = polygon.chamber_cut(lv)
    ell = sum(a[:-1]) - a[-1]
    ok = res.kind == "CutOfCPn2" and res.ell == ell and res.slice_size == ell - 2 * eps
    rep.add("polygon", f"{name}/chamber", "pass" if ok else "fail",
            {"kind": "CutOfCPn2", "ell": str(ell), "slice_size": str(ell - 2 * eps)}, res.to_dict(), entry.provenance)
    margin = polygon.genericity_margin(beta)
    rep.add("polygon", f"{name}/tiny", "pass" if eps < margin else "fail", f"< {margin}", str(eps),
            "genericity margin of the vector without edge 0")

    # tiny-edge pairing: image [a_j - eps, a_j + eps] of length 2 eps for every j
    for j in range(1, n + 1):
        exact = polygon.phi_image_analytic(lv, j, 0)
        want = polygon.Interval(lv[j] - eps, lv[j] + eps)
        rep.add("polygon", f"{name}/phi_{j}0/analytic", "pass" if exact == want else "fail",
                want.to_dict(), exact.to_dict(), "closure constraints")
    _interval_checks(rep, name, lv, n, 0, samples, seed, 2 * eps, "length 2*eps")

    # Euler class of the level circle bundle from the DH slope: e(xi_n)
    basis = dhline.polygon_basis(n)
    c1 = dhline.polygon_class(beta, n, 0, basis)
    c2 = dhline.polygon_class(beta, n, eps, basis)
    slope = dhline.euler_from_slope(c1, 0, c2, eps)
    unit = dhline.H2Class.unit(basis, basis[n - 1])
    rep.add("dhline", f"{name}/euler_class", "pass" if slope == unit else "fail", unit.to_dict(), slope.to_dict(),
            "euler_from_slope on the polygon DH path")

    # additive cohomology: CP^(n-3) cut along a line bundle = CP^(n-2) # conj CP^(n-2)
    t = weight_cut_model(cp_poincare(n - 3), 1, label=f"pol{lv}")
    want = connected_sum_cp_poincare(n - 2)
    ok = t.p == want and suite_check(t).ok
    rep.add("simpleham", f"{name}/cohomology", "pass" if ok else "fail", want.to_json(), t.p.to_json(),
            f"weight_cut_model(P(CP^{n - 3}), 1)")


def check_entry(entry: CatalogEntry, seed: int = 0, samples: int = DEFAULT_SAMPLES) -> Report:
    rep = Report(seed=seed)
    try:
        if entry.family == "polygon-cp":
            _polygon_cp_checks(entry, rep, samples, seed)
        elif entry.family == "polygon-cut":
            _polygon_cut_checks(entry, rep, samples, seed)
        else:
            _triple_checks(entry, rep)
    except HamEdgeError as exc:
        rep.add("catalog", f"{entry.name}/error", "fail", None, f"{type(exc).__name__}: {exc}", entry.provenance)
    return rep


def run_catalog(family: str | None = None, max_dim: int | None = None, *, seed: int = 0,
                samples: int = DEFAULT_SAMPLES, workers: int = 1, deterministic: bool = False) -> Report:
    """Check every catalogue entry matching the filters; records are ordered by entry name."""
    if family is not None and family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    entries = [e for e in build_catalog()
               if (family is None or e.family == family) and (max_dim is None or e.dim <= max_dim)]
    entries.sort(key=lambda e: e.name)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda e: check_entry(e, seed, samples), entries))
    else:
        parts = [check_entry(e, seed, samples) for e in entries]
    report = Report(seed=seed, deterministic=deterministic)
    for part in parts:
        report.extend(part)
    return report
