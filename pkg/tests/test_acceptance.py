"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
summary lines; every criterion also enforces its runtime budget.
"""

import time

import numpy as np
import pytest

from treepart import (
    apply_switch,
    bridge_block_decomposition,
    congestion,
    congestion_ac,
    ensure_connected_clusters,
    evaluate_only,
    find_bridges,
    flow_weighted_graph,
    is_tree_partition,
    kirchhoff_tree_count,
    load_snapshot,
    make_network,
    recursive,
    solve_ac,
    solve_dc,
    spectral_partition,
    to_network,
    two_stage,
)
from treepart.grid import Partition, SwitchSet, cross_edges, enumerate_spanning_trees
from treepart.pipeline import _split_sides
from treepart.switching import build_milp, make_instance, solve_bruteforce, solve_milp

from conftest import build_net, random_connected_net
from test_grid import bridges_oracle
from test_switching import random_instance

_MILP_SOLUTIONS = []  # criterion 4 hands its optima to criterion 9
_PIPELINE_REPORTS = []


def _verdict(name, ok, detail, t0, budget):
    elapsed = time.time() - t0
    line = (f"[ACCEPTANCE] {name}: {'PASS' if ok else 'FAIL'} "
            f"({detail}; {elapsed:.1f}s of {budget:.0f}s budget)")
    print(line)
    assert ok, line
    assert elapsed < budget, f"{name}: runtime {elapsed:.1f}s over budget {budget}s"


def _net(data_dir, name):
    engine = "ac" if name.endswith("_ac") else "dc"
    return to_network(load_snapshot(data_dir / "snapshots" / f"{name}.json"), engine)


def test_criterion_1_dc_engine_correctness():
    t0 = time.time()
    rng = np.random.default_rng(2026)
    worst_balance = 0.0
    worst_super = 0.0
    for _ in range(100):
        net = random_connected_net(rng, max_n=50)
        sol = solve_dc(net)
        balance = net.p.copy()
        np.subtract.at(balance, net.from_bus, sol.flows)
        np.add.at(balance, net.to_bus, sol.flows)
        worst_balance = max(worst_balance, float(np.abs(balance).max()))

        p2 = rng.normal(0, 1, net.n_buses)
        p2 -= p2.mean()

        def with_p(p):
            return make_network(net.bus_ids, p, net.from_bus, net.to_bus,
                                net.susceptance, net.capacity, net.unlimited,
                                net.line_ids, net.reference)

        f2 = solve_dc(with_p(p2)).flows
        f12 = solve_dc(with_p(net.p + p2)).flows
        worst_super = max(worst_super, float(np.abs(f12 - (sol.flows + f2)).max()))

    tri = build_net([(0, 1), (0, 2), (2, 1)], p=[1, -1, 0], reference=2)
    tri_sol = solve_dc(tri)
    tri_ok = (np.abs(tri_sol.flows - np.array([2 / 3, 1 / 3, 1 / 3])).max() <= 1e-12)

    ok = worst_balance <= 1e-8 and worst_super <= 1e-9 and tri_ok
    _verdict("criterion 1 (dc engine correctness)", ok,
             f"balance {worst_balance:.1e}, superposition {worst_super:.1e}, "
             f"triangle exact {tri_ok}", t0, 5.0)


def test_criterion_2_bridges_and_decomposition(data_dir):
    t0 = time.time()
    rng = np.random.default_rng(7)
    agree = all(
        find_bridges(net) == bridges_oracle(net)
        for net in (random_connected_net(rng, max_n=40) for _ in range(100))
    )
    squares = build_net([(0, 1), (1, 2), (2, 3), (3, 0),
                         (4, 5), (5, 6), (6, 7), (7, 4), (3, 4)])
    fig_ok = find_bridges(squares) == [8]
    net73 = _net(data_dir, "case73_dc")
    sizes = bridge_block_decomposition(net73).nontrivial_sizes()
    ieee73_ok = sizes == [71]
    ok = agree and fig_ok and ieee73_ok
    _verdict("criterion 2 (bridges and blocks)", ok,
             f"oracle agreement {agree}, joined-squares {fig_ok}, "
             f"73-bus blocks {sizes}", t0, 10.0)


def test_criterion_3_spanning_tree_enumeration():
    t0 = time.time()
    rng = np.random.default_rng(11)
    all_match = True
    for _ in range(50):
        k = int(rng.integers(2, 13))
        m = int(rng.integers(k - 1, 26))
        fb = [int(rng.integers(v)) for v in range(1, k)]
        tb = list(range(1, k))
        while len(fb) < m:
            a, b = int(rng.integers(k)), int(rng.integers(k))
            if a != b:
                fb.append(a)
                tb.append(b)
        net = build_net(list(zip(fb, tb)), n=k)
        red = cross_edges(net, Partition(np.arange(k), k))
        trees = list(enumerate_spanning_trees(red))
        if len(trees) != kirchhoff_tree_count(red) or len(set(trees)) != len(trees):
            all_match = False
            break
    k4 = build_net([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    red4 = cross_edges(k4, Partition(np.arange(4), 4))
    k4_ok = len(list(enumerate_spanning_trees(red4))) == 16
    ok = all_match and k4_ok
    _verdict("criterion 3 (spanning tree enumeration)", ok,
             f"kirchhoff agreement {all_match}, K4 gives 16 {k4_ok}", t0, 5.0)


def test_criterion_4_milp_exactness():
    t0 = time.time()
    rng = np.random.default_rng(20260810)
    worst = 0.0
    exact = 0
    for _ in range(50):
        inst = random_instance(rng, max_trees=5000)
        bf = solve_bruteforce(inst)
        ms = solve_milp(build_milp(inst))
        gap = abs(ms.gamma - bf.gamma)
        worst = max(worst, gap)
        if gap <= 1e-6:
            exact += 1
        _MILP_SOLUTIONS.append((inst, ms))
    ok = exact == 50
    _verdict("criterion 4 (MILP exactness)", ok,
             f"{exact}/50 instances equal brute force, worst gap {worst:.2e}",
             t0, 120.0)


def test_criterion_5_structural_reproduction(data_dir):
    t0 = time.time()
    results = {}
    soft_hit = False
    for case in ("case30_dc", "case118_dc"):
        net = _net(data_dir, case)
        best = 0
        for seed in range(1, 21):
            rep = two_stage(net, 5, clusterer="spectral-ln", solver="milp", seed=seed)
            sizes = rep.bbd_post.nontrivial_sizes()
            best = max(best, len(sizes))
            _PIPELINE_REPORTS.append((net, rep, "dc"))
            if case == "case30_dc" and sizes == [7, 3, 3, 3, 3]:
                soft_hit = True
        results[case] = best
    ok = all(v >= 5 for v in results.values())
    soft = ("soft target {7,3,3,3,3} matched" if soft_hit
            else "soft target {7,3,3,3,3} not matched (see decisions notes)")
    _verdict("criterion 5 (structural reproduction)", ok,
             f"max non-trivial blocks {results}; {soft}", t0, 120.0)


def test_criterion_6_milp_vs_recursive_dc(data_dir):
    t0 = time.time()
    seeds = (1, 2, 3)
    clusterers = ("fastgreedy", "spectral-bn", "spectral-ln")
    summary = {}
    ok = True
    for case in ("case118_dc", "case354_dc"):
        net = _net(data_dir, case)
        wins = 0
        for clusterer in clusterers:
            milp_g = []
            rdc_g = []
            for seed in seeds:
                a = two_stage(net, 5, clusterer=clusterer, solver="milp", seed=seed)
                b = recursive(net, 5, engine="dc", clusterer=clusterer, seed=seed)
                milp_g.append(a.gamma_post)
                rdc_g.append(b.gamma_post)
                _PIPELINE_REPORTS.append((net, a, "dc"))
                _PIPELINE_REPORTS.append((net, b, "dc"))
            if float(np.median(milp_g)) <= float(np.median(rdc_g)) + 1e-9:
                wins += 1
        summary[case] = wins
        ok = ok and wins >= 2
    _verdict("criterion 6 (MILP at least matches recursive DC)", ok,
             f"clusterers where median MILP <= median R-DC: {summary} (of 3)",
             t0, 600.0)


def _shared_bipartition_instance(net, seed):
    """The 2-partition the recursive method would pick in its first round."""
    base = solve_ac(net)
    mags = np.maximum(np.abs(base.s_from), np.abs(base.s_to))
    wg = flow_weighted_graph(net, mags)
    bbd = bridge_block_decomposition(net)
    block = np.array(sorted(max(bbd.blocks, key=lambda blk: (len(blk), -blk[0]))),
                     np.int64)
    from treepart.clustering import subgraph_weighted
    from treepart.grid import induced_subnetwork

    wgb = subgraph_weighted(wg, block)
    sub = induced_subnetwork(net, block)
    bipart = spectral_partition(wgb, 2, mode="ln", seed=seed)
    bipart = ensure_connected_clusters(sub, bipart, weights=wgb.line_weights)
    sides = _split_sides(net, np.arange(net.n_buses), block, bipart.labels)
    return Partition(sides, 2), base


def test_criterion_7_ac_parity_at_k2(data_dir):
    t0 = time.time()
    parity_ok = True
    details = []
    for case in ("case30_ac", "case39_ac"):
        net = _net(data_dir, case)
        part, base = _shared_bipartition_instance(net, seed=1)
        inst = make_instance(net, part, "ac", base)
        bf = solve_bruteforce(inst)
        rec = recursive(net, 2, engine="ac", clusterer="spectral-ln", seed=1)
        same = (bf.switch.lines == rec.switch.lines
                and abs(bf.gamma - rec.gamma_post) <= 1e-6)
        parity_ok = parity_ok and same
        details.append(f"{case} identical={same}")
        _PIPELINE_REPORTS.append((net, rec, "ac"))
    g30 = congestion_ac(solve_ac(_net(data_dir, "case30_ac")),
                        _net(data_dir, "case30_ac")).gamma
    g39 = congestion_ac(solve_ac(_net(data_dir, "case39_ac")),
                        _net(data_dir, "case39_ac")).gamma
    base_ok = abs(g30 - 1.07) <= 0.05 and abs(g39 - 0.89) <= 0.05
    ok = parity_ok and base_ok
    _verdict("criterion 7 (AC parity at k=2)", ok,
             f"{'; '.join(details)}; base gammas {g30:.3f}/{g39:.3f}", t0, 300.0)


def test_criterion_8_recursion_scales_linearly(data_dir):
    t0 = time.time()
    net = _net(data_dir, "case118_dc")
    recursive(net, 3, engine="dc", clusterer="spectral-ln", seed=1)  # warm caches

    def median_time(k):
        times = []
        for run in range(5):
            s = time.perf_counter()
            recursive(net, k, engine="dc", clusterer="spectral-ln", seed=1 + run)
            times.append(time.perf_counter() - s)
        return float(np.median(times))

    t3 = median_time(3)
    t6 = median_time(6)
    ratio = t6 / t3
    ok = ratio <= 2.5
    _verdict("criterion 8 (recursion linear in k)", ok,
             f"median k=6 / k=3 wall-time ratio {ratio:.2f} (t3={t3:.2f}s, t6={t6:.2f}s)",
             t0, 120.0)


def test_criterion_9_contract_suite(data_dir):
    t0 = time.time()
    tree_ok = True
    gamma_ok = True
    for net, rep, engine in _PIPELINE_REPORTS:
        post = apply_switch(net, rep.switch)
        if not is_tree_partition(post, rep.partition):
            tree_ok = False
        g, _ = evaluate_only(net, rep.switch, engine=engine)
        tol = 1e-9 if engine == "dc" else 1e-6
        if abs(g - rep.gamma_post) > tol:
            gamma_ok = False
    bigm_ok = all(ms.bigm_ok for _, ms in _MILP_SOLUTIONS)
    decode_ok = all(
        len(ms.kept_tree) == inst.partition.k - 1 for inst, ms in _MILP_SOLUTIONS
    )
    ok = tree_ok and gamma_ok and bigm_ok and decode_ok and bool(_PIPELINE_REPORTS)
    _verdict("criterion 9 (contract suite)", ok,
             f"{len(_PIPELINE_REPORTS)} reports re-verified, "
             f"{len(_MILP_SOLUTIONS)} MILP optima big-M clean", t0, 300.0)
