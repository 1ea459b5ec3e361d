"""Case parsing, snapshots, network assembly, report serialization."""

import json
import re

import numpy as np
import pytest

from treepart import (
    DisconnectedError,
    ParseError,
    UnbalancedInjectionsError,
    load_snapshot,
    parse_matpower,
    snapshot_from_case,
    to_network,
)
from treepart.caseio import dumps_snapshot, loads_snapshot
from treepart.grid import find_bridges

MINIMAL_CASE = """
function mpc = tiny
mpc.version = '2';
mpc.baseMVA = 100;
mpc.bus = [
\t1\t3\t0\t0\t0\t0\t1\t1\t0\t135\t1\t1.05\t0.95;
\t2\t1\t100\t10\t0\t0\t1\t1\t0\t135\t1\t1.05\t0.95;
];
mpc.gen = [
\t1\t100\t0\t50\t-50\t1\t100\t1\t200\t0;
];
mpc.branch = [
\t1\t2\t0\t0.5\t0\t100\t100\t100\t0\t0\t1\t-360\t360;
];
"""


class TestParseMatpower:
    def test_minimal_two_bus_case(self):
        case = parse_matpower(MINIMAL_CASE)
        assert case.base_mva == 100.0
        assert case.bus.shape[0] == 2
        assert case.branch.shape[0] == 1
        assert case.gen.shape[0] == 1

    def test_comments_are_transparent(self):
        commented = MINIMAL_CASE.replace(
            "mpc.bus = [", "% leading comment\nmpc.bus = [ % trailing\n% row note"
        )
        a = parse_matpower(MINIMAL_CASE)
        b = parse_matpower(commented)
        assert np.array_equal(a.bus, b.bus)
        assert np.array_equal(a.branch, b.branch)

    def test_scientific_notation(self):
        text = MINIMAL_CASE.replace("0.5", "5.0e-1")
        case = parse_matpower(text)
        assert case.branch[0, 3] == 0.5

    def test_row_arity_error_reports_line(self):
        bad = MINIMAL_CASE.replace(
            "\t1\t2\t0\t0.5\t0\t100\t100\t100\t0\t0\t1\t-360\t360;",
            "\t1\t2\t0.5;",
        )
        with pytest.raises(ParseError) as err:
            parse_matpower(bad)
        assert err.value.line is not None

    def test_missing_matrix_rejected(self):
        bad = re.sub(r"mpc\.gen = \[.*?\];", "", MINIMAL_CASE, flags=re.DOTALL)
        with pytest.raises(ParseError, match="mpc.gen"):
            parse_matpower(bad)

    def test_unknown_matrix_warns_and_parses(self, caplog):
        text = MINIMAL_CASE + "\nmpc.gencost = [\n\t2\t0\t0\t2\t10\t0;\n];\n"
        with caplog.at_level("WARNING"):
            case = parse_matpower(text)
        assert case.bus.shape[0] == 2
        assert any("gencost" in r.message for r in caplog.records)

    def test_duplicate_bus_rejected(self):
        bad = MINIMAL_CASE.replace(
            "\t2\t1\t100", "\t1\t1\t100"
        )
        with pytest.raises(ParseError, match="duplicate"):
            parse_matpower(bad)

    def test_two_slacks_rejected(self):
        bad = MINIMAL_CASE.replace(
            "\t2\t1\t100\t10", "\t2\t3\t100\t10"
        )
        with pytest.raises(ParseError, match="slack"):
            parse_matpower(bad)

    def test_ieee30_row_counts(self, data_dir):
        text = (data_dir / "case30.m").read_text()
        case = parse_matpower(text)

        def oracle_rows(name):
            body = re.search(rf"mpc\.{name}\s*=\s*\[(.*?)\];", text, re.DOTALL).group(1)
            return sum(
                1 for ln in body.splitlines()
                if ln.strip() and not ln.strip().startswith("%")
            )

        assert case.bus.shape[0] == oracle_rows("bus") == 30
        assert case.branch.shape[0] == oracle_rows("branch") == 41


class TestSnapshot:
    def test_two_bus_unit_conversion(self):
        case = parse_matpower(MINIMAL_CASE)
        snap = snapshot_from_case(case)
        net = to_network(snap, "dc")
        assert net.susceptance[0] == pytest.approx(2.0)  # 1/x = 1/0.5
        assert net.capacity[0] == pytest.approx(1.0)     # rateA / baseMVA
        assert net.p == pytest.approx([1.0, -1.0])

    def test_status_zero_branch_dropped(self):
        text = MINIMAL_CASE.replace("];", "\t1\t2\t0\t1.0\t0\t0\t0\t0\t0\t0\t0\t-360\t360;\n];", 1)
        # appending to bus matrix would corrupt it; patch the branch one instead
        text = MINIMAL_CASE.replace(
            "\t1\t2\t0\t0.5\t0\t100\t100\t100\t0\t0\t1\t-360\t360;",
            "\t1\t2\t0\t0.5\t0\t100\t100\t100\t0\t0\t1\t-360\t360;\n"
            "\t1\t2\t0\t1.0\t0\t50\t50\t50\t0\t0\t0\t-360\t360;",
        )
        snap = snapshot_from_case(parse_matpower(text))
        assert snap.n_lines == 1

    def test_rate_zero_means_unlimited(self):
        text = MINIMAL_CASE.replace(
            "\t1\t2\t0\t0.5\t0\t100\t100\t100", "\t1\t2\t0\t0.5\t0\t0\t0\t0"
        )
        snap = snapshot_from_case(parse_matpower(text))
        assert snap.unlimited[0]
        assert np.isinf(snap.capacity[0])

    def test_zero_reactance_rejected(self):
        text = MINIMAL_CASE.replace("\t1\t2\t0\t0.5", "\t1\t2\t0\t0")
        with pytest.raises(ParseError, match="reactance"):
            snapshot_from_case(parse_matpower(text))

    def test_balance_at_slack(self):
        text = MINIMAL_CASE.replace("\t1\t100\t0\t50", "\t1\t90\t0\t50")
        snap = snapshot_from_case(parse_matpower(text), balance="slack")
        assert abs(snap.p.sum()) < 1e-12

    def test_unbalanced_rejected_for_dc(self):
        text = MINIMAL_CASE.replace("\t1\t100\t0\t50", "\t1\t90\t0\t50")
        snap = snapshot_from_case(parse_matpower(text), balance="none")
        with pytest.raises(UnbalancedInjectionsError):
            to_network(snap, "dc")

    def test_roundtrip_is_byte_identical(self, data_dir):
        snap = load_snapshot(data_dir / "snapshots" / "case30_dc.json")
        text = dumps_snapshot(snap)
        again = dumps_snapshot(loads_snapshot(text))
        assert text == again

    def test_file_roundtrip_preserves_arrays(self, data_dir):
        snap = load_snapshot(data_dir / "snapshots" / "case39_ac.json")
        back = loads_snapshot(dumps_snapshot(snap))
        assert np.array_equal(back.bus_ids, snap.bus_ids)
        assert back.p == pytest.approx(snap.p, abs=0)
        assert back.capacity == pytest.approx(snap.capacity, abs=0)
        assert np.array_equal(back.unlimited, snap.unlimited)

    def test_per_unit_scale_invariance(self):
        # scaling MW quantities and baseMVA together leaves per-unit flows alone
        scaled = MINIMAL_CASE.replace("mpc.baseMVA = 100", "mpc.baseMVA = 200")
        scaled = scaled.replace("\t2\t1\t100\t10", "\t2\t1\t200\t20")
        scaled = scaled.replace("\t1\t100\t0\t50\t-50\t1\t100\t1\t200\t0",
                                "\t1\t200\t0\t100\t-100\t1\t200\t1\t400\t0")
        scaled = scaled.replace("\t100\t100\t100\t0\t0\t1", "\t200\t200\t200\t0\t0\t1")
        a = to_network(snapshot_from_case(parse_matpower(MINIMAL_CASE)), "dc")
        b = to_network(snapshot_from_case(parse_matpower(scaled)), "dc")
        from treepart import solve_dc

        assert solve_dc(a).flows == pytest.approx(solve_dc(b).flows, abs=1e-12)


class TestToNetwork:
    def test_disconnected_named_components(self):
        text = MINIMAL_CASE.replace(
            "\t2\t1\t100\t10\t0\t0\t1\t1\t0\t135\t1\t1.05\t0.95;",
            "\t2\t1\t100\t10\t0\t0\t1\t1\t0\t135\t1\t1.05\t0.95;\n"
            "\t3\t1\t0\t0\t0\t0\t1\t1\t0\t135\t1\t1.05\t0.95;\n"
            "\t4\t1\t0\t0\t0\t0\t1\t1\t0\t135\t1\t1.05\t0.95;",
        ).replace(
            "\t1\t2\t0\t0.5\t0\t100\t100\t100\t0\t0\t1\t-360\t360;",
            "\t1\t2\t0\t0.5\t0\t100\t100\t100\t0\t0\t1\t-360\t360;\n"
            "\t3\t4\t0\t0.5\t0\t100\t100\t100\t0\t0\t1\t-360\t360;",
        ).replace("\t1\t100\t0\t50", "\t1\t100\t0\t50")
        snap = snapshot_from_case(parse_matpower(text), balance="slack")
        with pytest.raises(DisconnectedError) as err:
            to_network(snap, "dc")
        assert len(err.value.components) == 2

    def test_branch_count_preserved(self, data_dir):
        snap = load_snapshot(data_dir / "snapshots" / "case118_dc.json")
        net = to_network(snap, "dc")
        assert net.n_lines == snap.n_lines == 186

    def test_ieee30_connected(self, data_dir):
        snap = load_snapshot(data_dir / "snapshots" / "case30_dc.json")
        net = to_network(snap, "dc")
        assert net.n_buses == 30 and net.n_lines == 41
        # BFS oracle for connectivity
        adj = {i: [] for i in range(net.n_buses)}
        for a, b in zip(net.from_bus, net.to_bus):
            adj[int(a)].append(int(b))
            adj[int(b)].append(int(a))
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        assert len(seen) == 30

    def test_ieee73_has_expected_bridges(self, data_dir):
        snap = load_snapshot(data_dir / "snapshots" / "case73_dc.json")
        net = to_network(snap, "dc")
        assert len(find_bridges(net)) == 2


class TestReportSerialization:
    def test_empty_switch_report_json(self, triangle):
        from treepart import SwitchSet, two_stage
        from treepart.caseio import write_report

        rep = two_stage(triangle, 2, clusterer="fastgreedy", solver="bruteforce", seed=0)
        payload = write_report(rep, "json")
        d = json.loads(payload)
        assert "switched_lines" in d
        assert isinstance(d["switched_lines"], list)

    def test_csv_contains_gamma(self, triangle):
        from treepart import two_stage
        from treepart.caseio import write_report

        rep = two_stage(triangle, 2, clusterer="fastgreedy", solver="bruteforce", seed=0)
        text = write_report(rep, "csv").decode()
        assert repr(rep.gamma_post) in text

    def test_json_reserialize_byte_identical(self, triangle):
        from treepart import two_stage
        from treepart.caseio import canonical_json, write_report

        rep = two_stage(triangle, 2, clusterer="fastgreedy", solver="bruteforce", seed=0)
        payload = write_report(rep, "json")
        again = canonical_json(json.loads(payload)).encode()
        assert payload == again
