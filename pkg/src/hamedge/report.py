"""Check records and their JSON / CSV / SVG renderings."""
from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from .errors import HamEdgeError

__all__ = ["REPORT_VERSION", "CheckRecord", "IntervalPlot", "Report", "IOFailure", "report_emit", "interval_svg"]

REPORT_VERSION = "1"


class IOFailure(HamEdgeError):
    pass


@dataclass(frozen=True)
class CheckRecord:
    module: str
    name: str
    status: str  # "pass" | "fail" | "warn"
    expected: object = None
    actual: object = None
    provenance: str = ""


@dataclass(frozen=True)
class IntervalPlot:
    name: str
    lo: float
    hi: float
    analytic_lo: float
    analytic_hi: float


@dataclass
class Report:
    seed: int | None = None
    checks: list[CheckRecord] = field(default_factory=list)
    intervals: list[IntervalPlot] = field(default_factory=list)
    deterministic: bool = False
    version: str = REPORT_VERSION

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    @property
    def failures(self) -> list[CheckRecord]:
        return [c for c in self.checks if c.status == "fail"]

    def add(self, *args, **kwargs) -> CheckRecord:
        rec = CheckRecord(*args, **kwargs)
        self.checks.append(rec)
        return rec

    def extend(self, other: Report):
        self.checks.extend(other.checks)
        self.intervals.extend(other.intervals)

    def to_dict(self) -> dict:
        out = {"version": self.version, "seed": self.seed, "checks": [asdict(c) for c in self.checks]}
        if not self.deterministic:
            out["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["module", "name", "status", "expected", "actual", "provenance"])
        for c in self.checks:
            writer.writerow([c.module, c.name, c.status, _cell(c.expected), _cell(c.actual), c.provenance])
        return buf.getvalue()


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    return json.dumps(value, sort_keys=True)


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def interval_svg(plot: IntervalPlot, width: int = 480, height: int = 120) -> str:
    """Sampled interval as a bar, analytic endpoints as ticks."""
    pad = 40
    lo = min(plot.lo, plot.analytic_lo)
    hi = max(plot.hi, plot.analytic_hi)
    span = (hi - lo) or 1.0
    lo -= 0.1 * span
    hi += 0.1 * span

    def x(v):
        return pad + (v - lo) / (hi - lo) * (width - 2 * pad)

    mid = height / 2
    return "\n".join([
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'  <title>{_escape(plot.name)}</title>',
        f'  <line x1="{pad}" y1="{mid}" x2="{width - pad}" y2="{mid}" stroke="#999" stroke-width="1"/>',
        f'  <rect x="{_fmt(x(plot.lo))}" y="{_fmt(mid - 8)}" width="{_fmt(max(x(plot.hi) - x(plot.lo), 0.5))}" '
        f'height="16" fill="#4a7bd0" fill-opacity="0.6"/>',
        *(f'  <line x1="{_fmt(x(v))}" y1="{_fmt(mid - 20)}" x2="{_fmt(x(v))}" y2="{_fmt(mid + 20)}" '
          f'stroke="#c0392b" stroke-width="2"/>' for v in (plot.analytic_lo, plot.analytic_hi)),
        *(f'  <text x="{_fmt(x(v))}" y="{_fmt(mid + 36)}" font-size="11" text-anchor="middle">{_fmt(v)}</text>'
          for v in (plot.analytic_lo, plot.analytic_hi)),
        f'  <text x="{pad}" y="16" font-size="12">{_escape(plot.name)}: sampled [{_fmt(plot.lo)}, {_fmt(plot.hi)}]</text>',
        "</svg>",
        "",
    ])


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _slug(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9._-]+", "_", name).strip("_") or "interval"


def report_emit(report: Report, fmt: str, path: str | Path | None = None) -> list[Path] | str:
    """Write ``report`` as ``json``, ``csv`` or ``svg-dir``.

    With ``path=None`` the json/csv text is returned instead of written.
    """
    try:
        if fmt == "json":
            text = report.to_json()
        elif fmt == "csv":
            text = report.to_csv()
        elif fmt == "svg-dir":
            if path is None:
                raise IOFailure("svg-dir output needs a directory path")
            out = Path(path)
            out.mkdir(parents=True, exist_ok=True)
            written = []
            for plot in report.intervals:
                target = out / f"{_slug(plot.name)}.svg"
                target.write_text(interval_svg(plot), encoding="utf-8")
                written.append(target)
            return written
        else:
            raise IOFailure(f"unknown report format {fmt!r}")
        if path is None:
            return text
        target = Path(path)
        target.write_text(text, encoding="utf-8")
        return [target]
    except OSError as exc:
        raise IOFailure(str(exc)) from exc
