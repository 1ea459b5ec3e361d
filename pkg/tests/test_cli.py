"""Command-line interface."""

import csv
import io
import json

import pytest

from treepart.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestPartition:
    def test_json_report_written(self, tmp_path, data_dir, capsys):
        out = tmp_path / "report.json"
        code, _, _ = run_cli(
            capsys, "partition", "--case", str(data_dir / "snapshots" / "case30_dc.json"),
            "--k", "3", "--method", "two-stage-milp", "--cluster", "spectral-ln",
            "--seed", "7", "--output", str(out),
        )
        assert code == 0
        d = json.loads(out.read_text())
        assert d["method"] == "two_stage_milp"
        assert d["k"] == 3
        assert d["gamma_pre"] == pytest.approx(1.0, abs=1e-9)

    def test_identical_config_identical_bytes(self, tmp_path, data_dir, capsys):
        args = ["partition", "--case", str(data_dir / "snapshots" / "case30_dc.json"),
                "--k", "4", "--method", "recursive-dc", "--cluster", "spectral-bn",
                "--seed", "3"]
        payloads = []
        for name in ("a.json", "b.json"):
            out = tmp_path / name
            assert run_cli(capsys, *args, "--output", str(out))[0] == 0
            d = json.loads(out.read_text())
            d.pop("timings")
            payloads.append(json.dumps(d, sort_keys=True))
        assert payloads[0] == payloads[1]

    def test_engine_mismatch_is_usage_error(self, data_dir, capsys):
        with pytest.raises(SystemExit) as err:
            main(["partition", "--case", str(data_dir / "snapshots" / "case30_dc.json"),
                  "--k", "3", "--method", "two-stage-milp", "--engine", "ac"])
        assert err.value.code == 2

    def test_unknown_method_is_usage_error(self, data_dir, capsys):
        with pytest.raises(SystemExit) as err:
            main(["partition", "--case", "x.json", "--k", "3", "--method", "annealing"])
        assert err.value.code == 2

    def test_table_output(self, data_dir, capsys):
        code, out, _ = run_cli(
            capsys, "partition", "--case", str(data_dir / "snapshots" / "case30_dc.json"),
            "--k", "3", "--method", "two-stage-milp", "--seed", "1",
            "--output-format", "table",
        )
        assert code == 0
        assert "gamma post-switching" in out
        assert "non-trivial blocks post" in out

    def test_csv_output(self, data_dir, capsys):
        code, out, _ = run_cli(
            capsys, "partition", "--case", str(data_dir / "snapshots" / "case30_dc.json"),
            "--k", "3", "--method", "two-stage-bf-dc", "--seed", "1",
            "--output-format", "csv",
        )
        assert code == 0
        header = out.splitlines()[0]
        assert "gamma_post" in header

    def test_runtime_failure_exit_1(self, tmp_path, capsys):
        code, _, err = run_cli(capsys, "partition", "--case",
                               str(tmp_path / "missing.json"), "--k", "3")
        assert code == 1
        assert "error" in err

    def test_matpower_case_accepted(self, data_dir, capsys):
        code, out, _ = run_cli(
            capsys, "partition", "--case", str(data_dir / "case30.m"),
            "--k", "3", "--method", "recursive-dc", "--seed", "1",
            "--output-format", "table",
        )
        assert code == 0


class TestInspect:
    def test_case73_block_structure(self, data_dir, capsys):
        code, out, _ = run_cli(capsys, "inspect", "--case",
                               str(data_dir / "snapshots" / "case73_dc.json"))
        assert code == 0
        assert "71" in out
        assert "trivial_blocks" in out and "2" in out

    def test_base_congestion_is_one_on_dc_snapshot(self, data_dir, capsys):
        code, out, _ = run_cli(capsys, "inspect", "--case",
                               str(data_dir / "snapshots" / "case30_dc.json"),
                               "--output-format", "json")
        assert code == 0
        d = json.loads(out)
        assert d["gamma_base"] == pytest.approx(1.0, abs=1e-9)
        assert d["nontrivial_sizes"] == [27]


class TestBench:
    def test_table1_rows(self, data_dir, tmp_path, capsys):
        out = tmp_path / "bench.csv"
        code, _, _ = run_cli(
            capsys, "bench", "--suite", "table1",
            "--cases", str(data_dir / "snapshots" / "case30_dc.json"),
            "--seeds", "1,2", "--output", str(out),
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out.read_text())))
        assert len(rows) == 1
        row = rows[0]
        assert row["case"] == "case30_dc"
        assert row["pre_blocks"] == "1"
        assert row["pre_sizes"] == "27"
        assert float(row["post_blocks_median"]) >= 4
        assert row["best"] == "*"

    def test_table2_pairs_methods(self, data_dir, tmp_path, capsys):
        out = tmp_path / "bench2.csv"
        code, _, _ = run_cli(
            capsys, "bench", "--suite", "table2",
            "--cases", str(data_dir / "snapshots" / "case30_dc.json"),
            "--seeds", "1", "--output", str(out),
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out.read_text())))
        assert len(rows) == 6  # 3 clusterers x 2 methods
        methods = {r["method"] for r in rows}
        assert methods == {"two-stage-milp", "recursive-dc"}
        for _, group in _group_by(rows, ("clusterer",)).items():
            assert any(r["best"] == "*" for r in group)

    def test_failures_recorded_not_fatal(self, data_dir, tmp_path, capsys):
        out = tmp_path / "bench3.csv"
        code, _, _ = run_cli(
            capsys, "bench", "--suite", "table1",
            "--cases", str(tmp_path / "nope.json"),
            str(data_dir / "snapshots" / "case30_dc.json"),
            "--seeds", "1", "--output", str(out),
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out.read_text())))
        assert len(rows) == 2
        assert rows[0]["error"] != ""
        assert rows[1]["error"] == ""


def _group_by(rows, keys):
    out = {}
    for r in rows:
        out.setdefault(tuple(r[k] for k in keys), []).append(r)
    return out
