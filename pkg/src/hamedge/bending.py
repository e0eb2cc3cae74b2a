"""Floating-point spatial polygons and their bending flows.

A configuration is an ``(n, 3)`` array of edge vectors ``rho_i`` with
``|rho_i| = alpha_i`` and ``sum(rho_i) = 0``.  The bending flow of the pair
``(i, j)`` rotates ``rho_i`` and ``rho_j`` about their sum; its moment map is
``phi_ij = |rho_i + rho_j|``.

The sampler is an alternating projection (spread the closure defect over the
edges, then renormalise every edge) run on whole batches at once.  It explores
the configuration space well enough to locate the extremes of ``phi_ij``; it
is not uniform for the Liouville measure.

Random streams come from numpy's PCG64.  Batches are cut into fixed-size
chunks and chunk ``c`` draws from ``default_rng([seed, c])``, so results do
not depend on how chunks are scheduled.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import BadIndices, DegenerateFrame, NonConvergence, NotGeneric, UndefinedAxis
from .polygon import Interval, LengthVector, as_lengths, is_generic, phi_image_analytic

__all__ = [
    "Config",
    "PhiImageEstimate",
    "sample_config",
    "sample_configs",
    "gauge_fix",
    "phi",
    "bend",
    "rotate_about",
    "is_critical",
    "estimate_phi_image",
]

CLOSURE_TOL = 1e-10
NORM_TOL = 1e-10
MAX_ITER = 10_000
MAX_RESTARTS = 32
CHUNK = 8192
AXIS_EPS = 1e-9  # below this |rho_i + rho_j| the flow is treated as singular


@dataclass(frozen=True)
class Config:
    rho: np.ndarray
    alpha: np.ndarray
    zero_indexed: bool = False
    closure_tol: float = CLOSURE_TOL
    norm_tol: float = NORM_TOL

    def __post_init__(self):
        rho = np.array(self.rho, dtype=float)
        alpha = np.array(self.alpha, dtype=float)
        if rho.ndim != 2 or rho.shape[1] != 3 or rho.shape[0] != alpha.shape[0]:
            raise ValueError(f"rho must be (n, 3) with n = len(alpha); got {rho.shape}")
        rho.setflags(write=False)
        alpha.setflags(write=False)
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "alpha", alpha)

    @property
    def n(self) -> int:
        return self.rho.shape[0]

    def pos(self, i: int) -> int:
        k = i - (0 if self.zero_indexed else 1)
        if not 0 <= k < self.n:
            raise BadIndices(f"edge index {i} out of range")
        return k

    def closure(self) -> float:
        return float(np.linalg.norm(self.rho.sum(axis=0)))

    def norm_error(self) -> float:
        return float(np.max(np.abs(np.linalg.norm(self.rho, axis=1) - self.alpha)))

    def is_valid(self) -> bool:
        return self.closure() <= self.closure_tol and self.norm_error() <= self.norm_tol

    def gram(self) -> np.ndarray:
        return self.rho @ self.rho.T

    def with_rho(self, rho: np.ndarray) -> Config:
        return replace(self, rho=rho)


def _norms(x: np.ndarray) -> np.ndarray:
    return np.sqrt(np.einsum("...k,...k->...", x, x))


def _project(rho: np.ndarray, alpha: np.ndarray, tol: float, max_iter: int) -> tuple[np.ndarray, np.ndarray]:
    """Alternating projection on a batch ``(B, n, 3)``; returns (rho, converged mask)."""
    weights = alpha / alpha.sum()
    rho = rho.copy()
    done = np.zeros(rho.shape[0], dtype=bool)
    active = np.arange(rho.shape[0])
    for _ in range(max_iter):
        cur = rho[active]
        s = cur.sum(axis=1)
        closed = _norms(s) < tol
        if closed.any():
            done[active[closed]] = True
            keep = ~closed
            active, cur, s = active[keep], cur[keep], s[keep]
        if active.size == 0:
            break
        cur = cur - weights[None, :, None] * s[:, None, :]
        lengths = _norms(cur)
        with np.errstate(divide="ignore", invalid="ignore"):
            cur = cur * (alpha[None, :] / lengths)[:, :, None]
        rho[active] = cur
    else:
        s = rho[active].sum(axis=1)
        done[active[_norms(s) < tol]] = True
    done &= np.isfinite(rho).all(axis=(1, 2))
    return rho, done


def _random_directions(rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    v = rng.normal(size=shape + (3,))
    return v / _norms(v)[..., None]


def _checked_alpha(alpha) -> LengthVector:
    lv = as_lengths(alpha)
    if lv.n < 3:
        raise BadIndices(f"need at least 3 edges, got {lv.n}")
    if not is_generic(lv.alpha):
        raise NotGeneric(f"{lv} is not generic; the configuration space is singular")
    return lv


def _sample_chunk(alpha: np.ndarray, count: int, seed: int, chunk: int, tol: float, max_iter: int) -> np.ndarray:
    out = np.empty((count, alpha.size, 3))
    todo = np.arange(count)
    for restart in range(MAX_RESTARTS + 1):
        rng = np.random.default_rng([seed, chunk, restart])
        start = _random_directions(rng, (todo.size, alpha.size)) * alpha[None, :, None]
        rho, ok = _project(start, alpha, tol, max_iter)
        out[todo[ok]] = rho[ok]
        todo = todo[~ok]
        if todo.size == 0:
            return out
    raise NonConvergence(f"{todo.size} samples failed to close after {MAX_RESTARTS} restarts")


def sample_configs(alpha, count: int, seed: int, *, tol: float = CLOSURE_TOL, max_iter: int = MAX_ITER,
                   workers: int = 1) -> np.ndarray:
    """``count`` closed configurations as a ``(count, n, 3)`` array, deterministic in ``seed``."""
    lv = _checked_alpha(alpha)
    a = np.array(lv.as_floats())
    sizes = [min(CHUNK, count - c * CHUNK) for c in range(math.ceil(count / CHUNK))]
    jobs = [(a, size, seed, c, tol, max_iter) for c, size in enumerate(sizes)]
    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda job: _sample_chunk(*job), jobs))
    else:
        parts = [_sample_chunk(*job) for job in jobs]
    if not parts:
        return np.empty((0, a.size, 3))
    return np.concatenate(parts)


def sample_config(alpha, seed: int, *, tol: float = CLOSURE_TOL) -> Config:
    """One closed configuration with side lengths ``alpha``."""
    lv = _checked_alpha(alpha)
    rho = sample_configs(lv, 1, seed, tol=tol)[0]
    return Config(rho, lv.as_floats(), lv.zero_indexed)


def gauge_fix(c: Config) -> Config:
    """Rotate so ``rho_1`` points along +z and the next non-parallel edge lies in the xz half-plane ``x >= 0``."""
    rho = c.rho
    n0 = np.linalg.norm(rho[0])
    if n0 == 0:
        raise DegenerateFrame("first edge vanishes")
    e3 = rho[0] / n0
    e1 = None
    for k in range(1, c.n):
        perp = rho[k] - np.dot(rho[k], e3) * e3
        size = np.linalg.norm(perp)
        if size > 1e-12 * max(np.linalg.norm(rho[k]), 1.0):
            e1 = perp / size
            break
    if e1 is None:
        # collinear: any completion of e3 works
        helper = np.eye(3)[np.argmin(np.abs(e3))]
        e1 = helper - np.dot(helper, e3) * e3
        e1 /= np.linalg.norm(e1)
    e2 = np.cross(e3, e1)
    frame = np.vstack([e1, e2, e3])
    fixed = rho @ frame.T
    fixed[0] = (0.0, 0.0, n0)
    return c.with_rho(fixed)


def phi(c: Config, i: int, j: int) -> float:
    """Bending Hamiltonian ``|rho_i + rho_j|``."""
    if i == j:
        raise BadIndices("i and j must differ")
    return float(np.linalg.norm(c.rho[c.pos(i)] + c.rho[c.pos(j)]))


def rotate_about(v: np.ndarray, axis: np.ndarray, theta) -> np.ndarray:
    """Rotate vectors ``v`` by ``theta`` about unit ``axis`` (broadcasting, Rodrigues' formula)."""
    cos, sin = np.cos(theta), np.sin(theta)
    dot = np.sum(axis * v, axis=-1, keepdims=True)
    return (v * np.expand_dims(cos, -1) + np.cross(axis, v) * np.expand_dims(sin, -1)
            + axis * dot * (1 - np.expand_dims(cos, -1)))


def bend(c: Config, i: int, j: int, theta: float) -> Config:
    """Flow of ``phi_ij`` for time ``theta``: rotate ``rho_i``, ``rho_j`` about their sum."""
    if i == j:
        raise BadIndices("i and j must differ")
    pi, pj = c.pos(i), c.pos(j)
    axis = c.rho[pi] + c.rho[pj]
    size = np.linalg.norm(axis)
    if size <= AXIS_EPS:
        raise UndefinedAxis(f"rho_{i} + rho_{j} vanishes")
    u = axis / size
    rho = c.rho.copy()
    rho[[pi, pj]] = rotate_about(c.rho[[pi, pj]], u, theta)
    return c.with_rho(rho)


def is_critical(c: Config, i: int, j: int, tol: float = 1e-6) -> bool:
    """True when the edges other than ``i``, ``j`` span at most a line."""
    if i == j:
        raise BadIndices("i and j must differ")
    keep = [k for k in range(c.n) if k not in (c.pos(i), c.pos(j))]
    s = np.linalg.svd(c.rho[keep], compute_uv=False)
    if s.size < 2:
        return True
    return bool(s[1] <= tol * (s[0] + 1e-300))


def _cross(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.stack([a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]])


def _refine(rho: np.ndarray, pi: int, pj: int, steps: int, maximize: bool) -> np.ndarray:
    """Coordinate ascent (or descent) of ``|rho_pi + rho_pj|`` along single bends.

    Bending ``(p, k)`` with ``p`` in the pair and ``k`` outside moves only one
    vector of the pair, and ``phi^2`` is then ``A + B cos(t) + C sin(t)``, so
    each line search is solved in closed form.
    """
    r = np.ascontiguousarray(rho.transpose(1, 2, 0))  # (n, 3, B)
    others = [k for k in range(r.shape[0]) if k not in (pi, pj)]
    moves = [(p, q, k) for k in others for p, q in ((pi, pj), (pj, pi))]
    sign = 1.0 if maximize else -1.0
    for step in range(steps):
        p, q, k = moves[step % len(moves)]
        rp, rq, rk = r[p], r[q], r[k]
        axis = rp + rk
        size = np.sqrt(np.einsum("ib,ib->b", axis, axis))
        live = size > AXIS_EPS
        u = axis / np.where(live, size, 1.0)
        up = np.einsum("ib,ib->b", u, rp)
        uxp = _cross(u, rp)
        b = np.einsum("ib,ib->b", rq, rp) - up * np.einsum("ib,ib->b", rq, u)
        c = np.einsum("ib,ib->b", rq, uxp)
        h = np.hypot(b, c)
        ok = live & (h > 0)
        h = np.where(ok, h, 1.0)
        cos = np.where(ok, sign * b / h, 1.0)
        sin = np.where(ok, sign * c / h, 0.0)
        uk = np.einsum("ib,ib->b", u, rk)
        r[p] = rp * cos + uxp * sin + u * (up * (1 - cos))
        r[k] = rk * cos + _cross(u, rk) * sin + u * (uk * (1 - cos))
    return np.ascontiguousarray(r.transpose(2, 0, 1))


@dataclass(frozen=True)
class PhiImageEstimate:
    lo: float
    hi: float
    analytic: Interval
    samples: int
    seed: int
    i: int = 0
    j: int = 0
    alpha: tuple[str, ...] = field(default_factory=tuple)

    @property
    def length(self) -> float:
        return self.hi - self.lo

    def to_dict(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "i": self.i,
            "j": self.j,
            "lo": self.lo,
            "hi": self.hi,
            "analytic_lo": str(self.analytic.lo),
            "analytic_hi": str(self.analytic.hi),
            "samples": self.samples,
            "seed": self.seed,
        }


def estimate_phi_image(alpha, i: int, j: int, n_samples: int = 10_000, seed: int = 0, *,
                       refine_steps: int = 200, workers: int = 1) -> PhiImageEstimate:
    """Sampled range of ``phi_ij``: min/max over refined samples."""
    lv = _checked_alpha(alpha)
    analytic = phi_image_analytic(lv, i, j)
    pi, pj = lv.pos(i), lv.pos(j)
    if pi == pj:
        raise BadIndices("i and j must differ")
    a = np.array(lv.as_floats())

    def extremes(chunk: int) -> tuple[float, float]:
        count = min(CHUNK, n_samples - chunk * CHUNK)
        rho = _sample_chunk(a, count, seed, chunk, CLOSURE_TOL, MAX_ITER)
        up = _refine(rho, pi, pj, refine_steps, maximize=True)
        down = _refine(rho, pi, pj, refine_steps, maximize=False)
        return float(_norms(down[:, pi] + down[:, pj]).min()), float(_norms(up[:, pi] + up[:, pj]).max())

    chunks = range(math.ceil(n_samples / CHUNK))
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(extremes, chunks))
    else:
        results = [extremes(c) for c in chunks]
    lo = min(r[0] for r in results)
    hi = max(r[1] for r in results)
    return PhiImageEstimate(lo, hi, analytic, n_samples, seed, i, j, tuple(str(a) for a in lv.alpha))
