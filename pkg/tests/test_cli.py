import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from heilbronn.cli import run
from heilbronn.formats import save_grid, save_pointset
from heilbronn.geometry import GridArrangement, PointSet

SCHEMA = json.loads(
    (Path(__file__).resolve().parents[1] / "src/heilbronn/schemas/output.schema.json").read_text()
)


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    assert code == 0, out
    record = json.loads(out)
    jsonschema.validate(record, SCHEMA)
    return record


@pytest.fixture
def corners_file(tmp_path):
    path = tmp_path / "corners4.txt"
    save_pointset(PointSet.from_coords([(0, 0), (1, 0), (0, 1), (1, 1)]), path)
    return str(path)


@pytest.fixture
def grid_file(tmp_path):
    a = GridArrangement.from_points(64, [(0, 0), (9, 1), (3, 7), (20, 33), (63, 5), (5, 63)])
    path = tmp_path / "g.txt"
    save_grid(a, path)
    return str(path), a


class TestMinTriangle:
    def test_corners_area_half(self, capsys, corners_file):
        rec = run_json(capsys, ["min-triangle", "--file", corners_file])
        assert rec["results"]["area"] == 0.5
        assert rec["seed"] is None

    def test_grid_input(self, capsys, grid_file):
        path, a = grid_file
        rec = run_json(capsys, ["min-triangle", "--file", path, "--mode", "exhaustive"])
        assert rec["results"]["twice_area"] >= 0


class TestSampleAndAnalyze:
    def test_sample_pointset(self, capsys, tmp_path):
        out = tmp_path / "pts.txt"
        rec = run_json(capsys, ["sample", "--n", "12", "--seed", "5", "--out", str(out)])
        assert rec["seed"] == 5
        assert out.exists()

    def test_sample_grid_then_rank(self, capsys, tmp_path):
        out = tmp_path / "g.txt"
        run_json(capsys, ["sample", "--n", "6", "--k", "32", "--seed", "5", "--out", str(out)])
        rec = run_json(capsys, ["rank", "--file", str(out)])
        assert int(rec["results"]["value"]) < int(rec["results"]["domain_size"])

    def test_analyze(self, capsys, tmp_path):
        out = tmp_path / "pts.txt"
        run_json(capsys, ["sample", "--n", "8", "--seed", "6", "--out", str(out)])
        rec = run_json(
            capsys,
            ["analyze", "--file", str(out), "--seed", "7", "--baseline-trials", "120"],
        )
        assert 0.0 <= rec["results"]["percentile"] <= 1.0


class TestScan:
    def test_json_output(self, capsys):
        rec = run_json(capsys, ["scan", "--ns", "8,12,16", "--seed", "2", "--trials", "80"])
        assert rec["results"]["slope"] < -2
        assert len(rec["results"]["samples"]) == 3
        assert rec["results"]["samples"][0]["seed"] == 2

    def test_csv_output(self, capsys):
        code = run(["scan", "--ns", "8,12,16", "--seed", "2", "--trials", "60",
                    "--format", "csv"])
        out = capsys.readouterr().out
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,trials,mean,stderr,lo95,hi95,seed"
        assert len(lines) == 4
        assert lines[1].split(",")[0] == "8"

    def test_bad_ns_is_usage_error(self, capsys):
        assert run(["scan", "--ns", "8,x", "--seed", "1"]) == 1


class TestTailStatsOptimize:
    def test_tail(self, capsys):
        rec = run_json(
            capsys, ["tail", "--n", "8", "--threshold", "1.0", "--trials", "50", "--seed", "3"]
        )
        assert rec["results"]["fraction"] == 1.0

    def test_stats_degenerate(self, capsys):
        rec = run_json(
            capsys,
            ["stats-degenerate", "--k", "2", "--n", "2", "--trials", "600", "--seed", "4"],
        )
        assert abs(rec["results"]["shared_row_fraction"] - 1 / 3) < 0.08

    def test_optimize(self, capsys):
        rec = run_json(
            capsys,
            ["optimize", "--n", "3", "--seed", "42", "--restarts", "4", "--steps", "1500"],
        )
        assert rec["results"]["value"] > 0.45


class TestConstructErdos:
    def test_construct(self, capsys, tmp_path):
        out = tmp_path / "erdos7.txt"
        rec = run_json(capsys, ["construct-erdos", "--p", "7", "--out", str(out)])
        assert rec["results"]["min_twice_area"] >= 1
        assert out.exists()

    def test_composite_is_data_error(self, capsys):
        assert run(["construct-erdos", "--p", "8"]) == 2


class TestRankUnrank:
    def test_round_trip_via_files(self, capsys, tmp_path, grid_file):
        path, a = grid_file
        rec = run_json(capsys, ["rank", "--file", path])
        out = tmp_path / "back.txt"
        rec2 = run_json(
            capsys,
            ["unrank", "--k", "64", "--n", "6", "--index", rec["results"]["value"],
             "--out", str(out)],
        )
        assert Path(out).read_text() == Path(path).read_text()

    def test_unrank_out_of_range(self, capsys):
        assert run(["unrank", "--k", "2", "--n", "2", "--index", "6"]) == 2


class TestWitnessCommands:
    def test_encode_decode_byte_identical(self, capsys, tmp_path):
        a = GridArrangement.from_points(64, [(0, 0), (2, 2), (4, 4), (9, 1), (20, 33), (63, 5)])
        grid_path = tmp_path / "g.txt"
        save_grid(a, grid_path)
        wit_path = tmp_path / "w.hw1"
        rec = run_json(
            capsys,
            ["witness", "collinear", "encode", "--file", str(grid_path), "--out", str(wit_path)],
        )
        assert rec["results"]["witness_length"] > 0
        back_path = tmp_path / "back.txt"
        run_json(
            capsys,
            ["witness", "collinear", "decode", "--file", str(wit_path), "--out", str(back_path)],
        )
        assert back_path.read_text() == grid_path.read_text()

    def test_kind_mismatch_is_data_error(self, capsys, tmp_path):
        a = GridArrangement.from_points(64, [(0, 0), (2, 2), (4, 4), (9, 1), (20, 33), (63, 5)])
        grid_path = tmp_path / "g.txt"
        save_grid(a, grid_path)
        wit_path = tmp_path / "w.hw1"
        run_json(
            capsys,
            ["witness", "collinear", "encode", "--file", str(grid_path), "--out", str(wit_path)],
        )
        assert run(["witness", "rowline", "decode", "--file", str(wit_path),
                    "--out", str(tmp_path / "x.txt")]) == 2

    def test_encode_without_structure_is_data_error(self, capsys, tmp_path):
        a = GridArrangement.from_points(64, [(0, 0), (9, 1), (3, 7), (20, 33)])
        grid_path = tmp_path / "g.txt"
        save_grid(a, grid_path)
        assert run(["witness", "collinear", "encode", "--file", str(grid_path)]) == 2

    def test_grid_flag_alias(self, capsys, tmp_path):
        a = GridArrangement.from_points(64, [(0, 0), (2, 2), (4, 4), (9, 1), (20, 33), (63, 5)])
        grid_path = tmp_path / "g.txt"
        save_grid(a, grid_path)
        rec = run_json(capsys, ["witness", "collinear", "encode", "--grid", str(grid_path)])
        assert rec["results"]["savings"] == rec["results"]["baseline_length"] - rec["results"]["witness_length"]


class TestExitCodes:
    def test_unknown_command_usage(self):
        assert run(["frobnicate"]) == 1

    def test_missing_required_flag(self):
        assert run(["sample", "--n", "4"]) == 1  # --seed required

    def test_missing_file_is_data_error(self):
        assert run(["min-triangle", "--file", "/nonexistent/nope.txt"]) == 2

    def test_module_entry_point(self, tmp_path):
        # one end-to-end subprocess check of `python -m heilbronn`
        out = tmp_path / "pts.txt"
        proc = subprocess.run(
            [sys.executable, "-m", "heilbronn", "sample", "--n", "5", "--seed", "1",
             "--out", str(out)],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        record = json.loads(proc.stdout)
        jsonschema.validate(record, SCHEMA)
        assert record["seed"] == 1
