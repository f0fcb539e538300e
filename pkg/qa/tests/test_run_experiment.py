"""
Phase 1 tests for src/run_experiment.py.
Config loading, per-sample measurement and the CSV writer (determinism, summary rows, caps).
"""
import csv
import json
import sys

import pytest

import run_experiment as rx


def _rows(path):
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


# ---------- TC-01: config (unit) ----------
@pytest.mark.unit
def test_config_defaults_and_path(tmp_path):
    cfg = rx.ExperimentConfig(sizes=[8], output_path=str(tmp_path / "out.csv"))
    assert cfg.samples_per_size == 1
    assert cfg.output_path == tmp_path / "out.csv"


@pytest.mark.unit
@pytest.mark.parametrize(
    "kwargs, message",
    [
        ({"sizes": []}, "must not be empty"),
        ({"sizes": [8, 2]}, "at least 3"),
        ({"sizes": [8], "samples_per_size": 0}, "samples_per_size"),
        ({"sizes": [8], "fineness_cap": -1}, "fineness_cap"),
        ({"sizes": [8], "seed": -5}, "64 bits"),
    ],
)
def test_config_validation(kwargs, message):
    with pytest.raises(ValueError, match=message):
        rx.ExperimentConfig(**kwargs)


@pytest.mark.unit
def test_load_config_file(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"sizes": [6, 9], "samples_per_size": 3, "seed": 4}), encoding="utf-8")
    cfg = rx.load_experiment_config(path)
    assert cfg.sizes == [6, 9]
    assert cfg.samples_per_size == 3
    assert cfg.seed == 4


@pytest.mark.unit
@pytest.mark.parametrize(
    "content, message",
    [
        ({"sizes": [6], "colour": 1}, "unknown keys"),
        ({"seed": 3}, "'sizes' is required"),
        ([6, 8], "JSON object"),
    ],
)
def test_load_config_errors(tmp_path, content, message):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(content), encoding="utf-8")
    with pytest.raises(ValueError, match=message):
        rx.load_experiment_config(path)


# ---------- TC-02: measurement (unit) ----------
@pytest.mark.unit
def test_measure_triangle():
    rec = rx.measure_sample(3, 0, 1)
    assert (rec.chord_count, rec.delta_dual, rec.r_dual, rec.f, rec.deg2path) == (0, 3, 2, 3, 2)
    assert rec.cap == 4
    assert rec.row(1) == {
        "n": "3", "seed": "1", "sample": "0", "chords": "0",
        "delta_dual": "3", "r_dual": "2", "f": "3", "deg2path": "2",
    }


@pytest.mark.unit
def test_measure_respects_fineness_cap():
    rec = rx.measure_sample(3, 0, 1, fineness_cap=1)
    assert rec.r_dual is None
    assert rec.row(1)["r_dual"] == ">1"


@pytest.mark.unit
@pytest.mark.parametrize("n", [3, 6, 11])
def test_default_cap_is_the_largest_dual_order(n):
    rec = rx.measure_sample(n, 0, 2)
    assert rec.cap == 2 * n - 2
    assert rec == rx.measure_sample(n, 0, 2, fineness_cap=2 * n - 2)


@pytest.mark.unit
def test_capped_label_uses_the_cap_that_was_searched(tmp_path):
    cfg = rx.ExperimentConfig(sizes=[3], samples_per_size=1, fineness_cap=0, output_path=tmp_path / "zero.csv")
    rows = _rows(rx.run_experiment(cfg, workers=1))
    assert rows[0]["r_dual"] == "2"
    rec = rx.measure_sample(3, 0, cfg.seed, fineness_cap=1)
    assert rec.cap == 1
    assert rec.row(cfg.seed)["r_dual"] == ">1"


@pytest.mark.unit
def test_measured_dual_degree_matches_facial_circumference():
    for i in range(5):
        rec = rx.measure_sample(10, i, 9)
        assert rec.delta_dual == rec.f
        assert rec.r_dual is not None


# ---------- TC-03: CSV output (unit, integration) ----------
@pytest.mark.unit
def test_triangle_experiment_rows(tmp_path):
    cfg = rx.ExperimentConfig(sizes=[3], samples_per_size=2, seed=5, output_path=tmp_path / "tri.csv")
    rows = _rows(rx.run_experiment(cfg, workers=1))
    assert [r["sample"] for r in rows] == ["0", "1", "summary"]
    assert rows[0]["r_dual"] == "2"
    assert rows[2] == {
        "n": "3", "seed": "5", "sample": "summary", "chords": "0.0000/0",
        "delta_dual": "3.0000/3", "r_dual": "2.0000/2", "f": "3.0000/3", "deg2path": "2.0000/2",
    }


@pytest.mark.unit
def test_capped_fineness_leaves_summary_blank(tmp_path):
    cfg = rx.ExperimentConfig(sizes=[3], samples_per_size=1, fineness_cap=1, output_path=tmp_path / "cap.csv")
    rows = _rows(rx.run_experiment(cfg, workers=1))
    assert rows[0]["r_dual"] == ">1"
    assert rows[1]["r_dual"] == "-"


@pytest.mark.integration
def test_output_is_byte_identical_across_runs_and_workers(tmp_path):
    blobs = []
    for name, workers in [("a.csv", 1), ("b.csv", 4), ("c.csv", 2)]:
        cfg = rx.ExperimentConfig(sizes=[8], samples_per_size=2, seed=1, output_path=tmp_path / name)
        blobs.append(rx.run_experiment(cfg, workers=workers).read_bytes())
    assert blobs[0] == blobs[1] == blobs[2]
    lines = blobs[0].decode("utf-8").split("\n")
    assert lines[0] == ",".join(rx.CSV_FIELDS)
    assert len([ln for ln in lines if ln]) == 4
    assert b"\r" not in blobs[0]


@pytest.mark.integration
def test_summary_rows_per_size_in_order(tmp_path):
    cfg = rx.ExperimentConfig(sizes=[9, 6], samples_per_size=3, seed=2, output_path=tmp_path / "two.csv")
    rows = _rows(rx.run_experiment(cfg, workers=2))
    assert [(r["n"], r["sample"]) for r in rows[-2:]] == [("6", "summary"), ("9", "summary")]
    assert [r["n"] for r in rows[:-2]] == ["6"] * 3 + ["9"] * 3


# ---------- TC-04: script entry point (unit) ----------
@pytest.mark.unit
def test_main_writes_file(tmp_path, monkeypatch, capsys):
    out = tmp_path / "main.csv"
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"sizes": [5], "output_path": str(out)}), encoding="utf-8")
    monkeypatch.setattr(sys, "argv", ["run_experiment.py", str(path), "--workers", "1"])
    assert rx.main() == 0
    assert out.exists()
    assert "Wrote" in capsys.readouterr().out


@pytest.mark.unit
def test_main_rejects_bad_config(tmp_path, monkeypatch):
    path = tmp_path / "cfg.json"
    path.write_text("{}", encoding="utf-8")
    monkeypatch.setattr(sys, "argv", ["run_experiment.py", str(path)])
    assert rx.main() == 2
