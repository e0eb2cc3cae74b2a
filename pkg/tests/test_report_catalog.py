import csv
import io
import json
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from hamedge.catalog import FAMILIES, build_catalog, check_entry, run_catalog
from hamedge.report import IntervalPlot, IOFailure, Report, interval_svg, report_emit

DATA = Path(__file__).parent / "data"
GOLDEN_PLOT = IntervalPlot("phi_3,4 on (1,1,1,2)", 1.0000004, 1.9999991, 1.0, 2.0)


def _sample_report(deterministic=True):
    rep = Report(seed=7, deterministic=deterministic)
    rep.add("polyalg", "a", "pass", [1, 0, 1], [1, 0, 1], "unit")
    rep.add("polygon", "b, with comma", "fail", "1", "2", "unit")
    rep.intervals.append(GOLDEN_PLOT)
    return rep


def test_report_json_schema():
    data = json.loads(_sample_report().to_json())
    assert set(data) == {"version", "seed", "checks"}
    assert data["seed"] == 7
    assert set(data["checks"][0]) == {"module", "name", "status", "expected", "actual", "provenance"}
    stamped = json.loads(_sample_report(deterministic=False).to_json())
    assert "timestamp" in stamped


def test_report_ok_and_failures():
    rep = _sample_report()
    assert not rep.ok
    assert [c.name for c in rep.failures] == ["b, with comma"]


def test_report_csv_round_trip():
    rows = list(csv.DictReader(io.StringIO(_sample_report().to_csv())))
    assert rows[0]["expected"] == "[1, 0, 1]"
    assert rows[1]["name"] == "b, with comma"


def test_svg_matches_golden():
    assert interval_svg(GOLDEN_PLOT) == (DATA / "interval_golden.svg").read_text(encoding="utf-8")


def test_svg_is_well_formed():
    root = ET.fromstring(interval_svg(IntervalPlot("a<b & c", 0.1, 0.2, 0.0, 0.3)).encode())
    assert root.tag.endswith("svg")


def test_emit(tmp_path):
    rep = _sample_report()
    assert report_emit(rep, "json") == rep.to_json()
    written = report_emit(rep, "csv", tmp_path / "r.csv")
    assert written[0].read_text() == rep.to_csv()
    svgs = report_emit(rep, "svg-dir", tmp_path / "svg")
    assert [p.name for p in svgs] == ["phi_3_4_on_1_1_1_2.svg"]
    with pytest.raises(IOFailure):
        report_emit(rep, "xml")
    with pytest.raises(IOFailure):
        report_emit(rep, "svg-dir")
    with pytest.raises(IOFailure):
        report_emit(rep, "json", tmp_path / "missing" / "r.json")


def test_catalog_contents():
    entries = build_catalog()
    families = {e.family for e in entries}
    assert families == set(FAMILIES)
    names = [e.name for e in entries]
    assert len(names) == len(set(names))
    assert "cp/n=03/k=01" in names


def test_catalog_triples_all_pass():
    rep = run_catalog(max_dim=6, deterministic=True)
    bad = [(c.name, c.actual) for c in rep.failures if not c.module.startswith("bending")]
    assert not bad


@pytest.mark.parametrize("family", ["polygon-cp", "polygon-cut"])
def test_catalog_polygons_pass_with_few_samples(family):
    rep = run_catalog(family, samples=256, seed=3, deterministic=True)
    assert rep.ok, [(c.name, c.expected, c.actual) for c in rep.failures]
    assert rep.intervals


def test_check_entry_reports_errors_as_failures():
    entry = build_catalog()[0]
    broken = type(entry)(entry.name, "polygon-cp", {}, (1, 1, 1, 1), provenance="test")
    rep = check_entry(broken)
    assert not rep.ok


def test_catalog_deterministic_json():
    a = run_catalog("polygon-cp", seed=5, samples=128, deterministic=True).to_json()
    b = run_catalog("polygon-cp", seed=5, samples=128, deterministic=True).to_json()
    assert a == b


def test_unknown_family():
    with pytest.raises(ValueError):
        run_catalog("tori")
