"""Command-line harness: ``hamedge <group> <command> [options]``.

Exit codes: 0 when every check passes, 1 when a check fails or the input is
mathematically rejected, 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import bending, dhline, polygon
from .catalog import DEFAULT_SAMPLES, FAMILIES, build_catalog, run_catalog
from .errors import HamEdgeError
from .report import IntervalPlot, interval_svg, report_emit
from .simpleham import grassmann_triple, product_with, residual_character, solve_triple, suite_check, weight_cut_model


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"expected a decimal or p/q rational, got {text!r}") from exc


def _rationals(text: str) -> list[Fraction]:
    return [_rational(tok) for tok in text.split(",") if tok.strip()]


def _lengths(args) -> polygon.LengthVector:
    values = _rationals(args.alpha)
    if not values:
        raise UsageError("empty --alpha")
    return polygon.LengthVector(tuple(values), args.zero_indexed)


def _default_seed() -> int:
    raw = os.environ.get("HAMEDGE_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        return 0


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _str_fraction(x):
    return None if x is None else str(x)


# -- triple -------------------------------------------------------------------

def cmd_triple_check(args) -> int:
    t = solve_triple(_ints(args.p0), args.r0, args.r1, symplectic=not args.no_symplectic)
    report = suite_check(t)
    _emit({"triple": t.to_dict(), "checks": report.to_list()})
    return 0 if report.ok else 1


def cmd_triple_cut(args) -> int:
    t = weight_cut_model(_ints(args.p0), args.r0)
    report = suite_check(t)
    _emit({"triple": t.to_dict(), "checks": report.to_list()})
    return 0 if report.ok else 1


def cmd_triple_grassmann(args) -> int:
    t = grassmann_triple(args.r, args.k)
    report = suite_check(t)
    _emit({"triple": t.to_dict(), "checks": report.to_list()})
    return 0 if report.ok else 1


def cmd_triple_product(args) -> int:
    base = solve_triple(_ints(args.p0), args.r0, args.r1, symplectic=not args.no_symplectic)
    t = product_with(base, _ints(args.q))
    report = suite_check(t)
    _emit({"triple": t.to_dict(), "checks": report.to_list()})
    return 0 if report.ok else 1


def cmd_triple_character(args) -> int:
    chi, scale = residual_character(_rationals(args.direction))
    _emit({"character": list(chi.components), "primitive": chi.primitive, "scale": str(scale)})
    return 0


# -- catalog ------------------------------------------------------------------

def cmd_catalog_verify(args) -> int:
    report = run_catalog(args.family, args.max_dim, seed=args.seed, samples=args.samples,
                         workers=args.workers, deterministic=args.deterministic)
    if args.format == "svg-dir":
        if not args.out:
            raise UsageError("--format svg-dir needs --out DIR")
        report_emit(report, "svg-dir", args.out)
        summary = {"passed": sum(c.status == "pass" for c in report.checks),
                   "failed": len(report.failures), "svg_dir": args.out}
        _emit(summary)
    elif args.out:
        report_emit(report, args.format, args.out)
    else:
        sys.stdout.write(report_emit(report, args.format))
    return 0 if report.ok else 1


def cmd_catalog_list(args) -> int:
    rows = [{"name": e.name, "family": e.family, "dim": e.dim, "provenance": e.provenance}
            for e in build_catalog() if args.family is None or e.family == args.family]
    _emit(rows)
    return 0


# -- polygon ------------------------------------------------------------------

def cmd_polygon_generic(args) -> int:
    lv = _lengths(args)
    if lv.n > polygon.MAX_EDGES:
        raise UsageError(f"at most {polygon.MAX_EDGES} edges (enumeration cap)")
    gen = polygon.is_generic(lv.alpha)
    _emit({"alpha": [str(a) for a in lv], "generic": gen, "cap": polygon.MAX_EDGES})
    return 0


def cmd_polygon_margin(args) -> int:
    lv = _lengths(args)
    _emit({"alpha": [str(a) for a in lv], "margin": str(polygon.genericity_margin(lv.alpha))})
    return 0


def cmd_polygon_classify(args) -> int:
    lv = _lengths(args)
    res = polygon.chamber_cut(lv) if args.zero_indexed else polygon.chamber_cpn(lv)
    _emit({"alpha": [str(a) for a in lv], **res.to_dict()})
    return 0


def cmd_polygon_tiny(args) -> int:
    lv = _lengths(args)
    if args.eps is None:
        margin = polygon.genericity_margin(lv.alpha)
        _emit({"alpha": [str(a) for a in lv], "margin": str(margin), "tiny_below": str(min(margin, lv.alpha[0]))})
        return 0
    out = polygon.add_tiny_edge(lv, _rational(args.eps))
    _emit({"alpha": [str(a) for a in out], "zero_indexed": True, "generic": polygon.is_generic(out.alpha)})
    return 0


def cmd_polygon_perturb(args) -> int:
    out = polygon.perturb(_lengths(args), args.j, _rational(args.delta))
    _emit({"alpha": [str(a) for a in out], "generic": polygon.is_generic(out.alpha)})
    return 0


def cmd_polygon_image(args) -> int:
    iv = polygon.phi_image_analytic(_lengths(args), args.i, args.j)
    _emit({**iv.to_dict(), "length": str(iv.length)})
    return 0


# -- bend ---------------------------------------------------------------------

def cmd_bend_interval(args) -> int:
    lv = _lengths(args)
    est = bending.estimate_phi_image(lv, args.i, args.j, args.samples, args.seed, refine_steps=args.refine_steps)
    exact = est.analytic
    scale = float(exact.length) or 1.0
    ok = all(abs(e - float(x)) <= args.rtol * (abs(float(x)) or scale)
             for e, x in ((est.lo, exact.lo), (est.hi, exact.hi)))
    out = est.to_dict()
    out["match"] = ok
    _emit(out)
    if args.svg:
        plot = IntervalPlot(f"phi_{args.i},{args.j} on {lv}", est.lo, est.hi, float(exact.lo), float(exact.hi))
        Path(args.svg).write_text(interval_svg(plot), encoding="utf-8")
    return 0 if ok else 1


def cmd_bend_sample(args) -> int:
    c = bending.sample_config(_lengths(args), args.seed)
    if args.gauge:
        c = bending.gauge_fix(c)
    _emit({"rho": c.rho.tolist(), "closure": c.closure(), "norm_error": c.norm_error(), "seed": args.seed})
    return 0 if c.is_valid() else 1


def cmd_bend_flow(args) -> int:
    lv = _lengths(args)
    c = bending.sample_config(lv, args.seed)
    before = bending.phi(c, args.i, args.j)
    d = bending.bend(c, args.i, args.j, float(args.theta))
    after = bending.phi(d, args.i, args.j)
    full = bending.bend(c, args.i, args.j, 2 * math.pi)
    result = {
        "phi_before": before,
        "phi_after": after,
        "phi_drift": abs(after - before),
        "closure_after": d.closure(),
        "period_error": float(abs(full.rho - c.rho).max()),
        "critical": bending.is_critical(c, args.i, args.j),
        "seed": args.seed,
    }
    _emit(result)
    ok = result["phi_drift"] <= args.tol and result["closure_after"] <= args.tol and result["period_error"] <= args.tol
    return 0 if ok else 1


# -- dh -----------------------------------------------------------------------

def _h2(text: str, basis: list[str] | None) -> dhline.H2Class:
    coords = _rationals(text)
    labels = basis or list(dhline.polygon_basis(len(coords)))
    if len(labels) != len(coords):
        raise UsageError(f"{len(coords)} coordinates for {len(labels)} basis labels")
    return dhline.H2Class(tuple(labels), tuple(coords))


def _basis(args) -> list[str] | None:
    return [b.strip() for b in args.basis.split(",")] if args.basis else None


def cmd_dh_depend(args) -> int:
    s = dhline.linear_dependence(_h2(args.omega0, _basis(args)), _h2(args.e, _basis(args)))
    _emit({"dependent": s is not None, "s": _str_fraction(s)})
    return 0


def cmd_dh_scale(args) -> int:
    _emit({"scale": str(dhline.scale_factor(_rational(args.s), _rational(args.ell)))})
    return 0


def cmd_dh_euler(args) -> int:
    basis = _basis(args)
    e = dhline.euler_from_slope(_h2(args.c1, basis), _rational(args.lam1), _h2(args.c2, basis), _rational(args.lam2))
    _emit(e.to_dict())
    return 0


def cmd_dh_at(args) -> int:
    basis = _basis(args)
    path = dhline.DHPath(_h2(args.base, basis), _h2(args.slope, basis), _rational(args.ell))
    _emit(dhline.dh_class_at(path, _rational(args.lam)).to_dict())
    return 0


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hamedge", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)

    def command(sub, name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    def alpha_opts(p):
        p.add_argument("--alpha", required=True, help="comma-separated decimals or p/q, e.g. 1/4,1,1,1,2")
        p.add_argument("--zero-indexed", action="store_true", help="index edges from 0 (tiny-edge convention)")

    triple = groups.add_parser("triple", help="Poincare-polynomial constraint solving").add_subparsers(
        dest="cmd", required=True)
    p = command(triple, "check", cmd_triple_check, "solve P1, P from P0, r0, r1 and run every check")
    p.add_argument("--p0", required=True, help="Betti numbers of M0 by degree, e.g. 1,0,1")
    p.add_argument("--r0", type=int, required=True)
    p.add_argument("--r1", type=int, required=True)
    p.add_argument("--no-symplectic", action="store_true", help="skip the even-Betti positivity test")
    p = command(triple, "cut", cmd_triple_cut, "symplectic cut of a weight bundle over M0")
    p.add_argument("--p0", required=True)
    p.add_argument("--r0", type=int, required=True)
    p = command(triple, "grassmann", cmd_triple_grassmann, "G_k(C^r) with the last coordinate circle")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = command(triple, "product", cmd_triple_product, "product with a manifold carrying the trivial action")
    p.add_argument("--p0", required=True)
    p.add_argument("--r0", type=int, required=True)
    p.add_argument("--r1", type=int, required=True)
    p.add_argument("--q", required=True, help="Betti numbers of the second factor")
    p.add_argument("--no-symplectic", action="store_true")
    p = command(triple, "character", cmd_triple_character, "primitive character along a moment direction")
    p.add_argument("--direction", required=True, help="e.g. 3/4,3/2,-9/4")

    catalog = groups.add_parser("catalog", help="generated example catalogue").add_subparsers(
        dest="cmd", required=True)
    p = command(catalog, "verify", cmd_catalog_verify, "check every catalogue entry")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--max-dim", type=int, help="only entries of complex dimension <= N")
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--deterministic", action="store_true", help="omit the timestamp field")
    p.add_argument("--format", choices=("json", "csv", "svg-dir"), default="json")
    p.add_argument("--out", help="output file (json/csv) or directory (svg-dir)")
    p = command(catalog, "list", cmd_catalog_list, "list catalogue entries")
    p.add_argument("--family", choices=FAMILIES)

    poly = groups.add_parser("polygon", help="exact length-vector combinatorics").add_subparsers(
        dest="cmd", required=True)
    alpha_opts(command(poly, "generic", cmd_polygon_generic, "is the length vector generic"))
    alpha_opts(command(poly, "margin", cmd_polygon_margin, "smallest |signed sum|"))
    alpha_opts(command(poly, "classify", cmd_polygon_classify, "chamber (cut chamber with --zero-indexed)"))
    p = command(poly, "tiny", cmd_polygon_tiny, "add a tiny edge (or report the margin without --eps)")
    alpha_opts(p)
    p.add_argument("--eps")
    p = command(poly, "perturb", cmd_polygon_perturb, "alpha(j, delta)")
    alpha_opts(p)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--delta", required=True)
    p = command(poly, "image", cmd_polygon_image, "exact image of |rho_i + rho_j|")
    alpha_opts(p)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)

    bend = groups.add_parser("bend", help="numerical bending flows").add_subparsers(dest="cmd", required=True)
    p = command(bend, "interval", cmd_bend_interval, "sampled image of phi_ij against the exact one")
    alpha_opts(p)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--refine-steps", type=int, default=200)
    p.add_argument("--rtol", type=float, default=1e-3)
    p.add_argument("--svg", help="write an SVG plot of the interval")
    p = command(bend, "flow", cmd_bend_flow, "bend a sampled configuration and report conservation")
    alpha_opts(p)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--theta", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--tol", type=float, default=1e-10)
    p = command(bend, "sample", cmd_bend_sample, "one closed configuration")
    alpha_opts(p)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--gauge", action="store_true", help="apply gauge_fix")

    dh = groups.add_parser("dh", help="Duistermaat-Heckman class lines").add_subparsers(dest="cmd", required=True)
    p = command(dh, "depend", cmd_dh_depend, "is e a multiple of omega0")
    p.add_argument("--omega0", required=True)
    p.add_argument("--e", required=True)
    p.add_argument("--basis")
    p = command(dh, "scale", cmd_dh_scale, "1 + s*ell, checked positive on [0, ell]")
    p.add_argument("--s", required=True)
    p.add_argument("--ell", required=True)
    p = command(dh, "euler", cmd_dh_euler, "slope of the class line from two samples")
    for flag in ("--c1", "--lam1", "--c2", "--lam2"):
        p.add_argument(flag, required=True)
    p.add_argument("--basis")
    p = command(dh, "at", cmd_dh_at, "class at level lam")
    for flag in ("--base", "--slope", "--ell", "--lam"):
        p.add_argument(flag, required=True)
    p.add_argument("--basis")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hamedge: error: {exc}", file=sys.stderr)
        return 2
    except HamEdgeError as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
