"""End-to-end tree-partitioning runs and their reports.

Two methods are offered. ``two_stage`` clusters the whole network once and
then solves one global cross-edge selection (MILP or brute force).
``recursive`` bipartitions the current largest bridge-block k-1 times, each
round followed by a cheap one-edge selection; candidates are always scored
on the full network because congestion is a global quantity.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import _accel, acflow, dcflow
from .clustering import (
    ClusteringError,
    ensure_connected_clusters,
    fastgreedy_partition,
    flow_weighted_graph,
    spectral_partition,
    subgraph_weighted,
)
from .grid import (
    BridgeBlockDecomposition,
    Network,
    Partition,
    SwitchSet,
    TreepartError,
    apply_switch,
    bridge_block_decomposition,
    compact_partition,
    components,
    induced_subnetwork,
)
from .switching import (
    GAMMA_TIE_TOL,
    build_milp,
    make_instance,
    solve_bruteforce,
    solve_milp,
)

SCHEMA_VERSION = 1

CLUSTERERS = ("fastgreedy", "spectral-ln", "spectral-bn")
METHODS = ("two_stage_milp", "two_stage_bf_dc", "two_stage_bf_ac",
           "recursive_dc", "recursive_ac")


@dataclass
class TreePartitionReport:
    method: str
    clusterer: str
    engine: str
    k: int                       # requested cluster count
    k_actual: int
    seed: int
    partition: Partition
    switch: SwitchSet
    gamma_pre: float
    gamma_post: float
    bbd_pre: BridgeBlockDecomposition
    bbd_post: BridgeBlockDecomposition
    network: Network
    optimal: bool
    timings: dict = field(default_factory=dict)
    stats: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)
    bigm_ok: bool | None = None

    def switched_lines(self) -> list[dict]:
        out = []
        for lid in self.switch.sorted():
            pos = self.network.line_pos(lid)
            out.append({
                "id": int(lid),
                "from": int(self.network.bus_ids[self.network.from_bus[pos]]),
                "to": int(self.network.bus_ids[self.network.to_bus[pos]]),
            })
        return out

    def to_dict(self, include_timings: bool = True) -> dict:
        def bbd_summary(bbd: BridgeBlockDecomposition) -> dict:
            sizes = bbd.nontrivial_sizes()
            return {
                "nontrivial_count": len(sizes),
                "nontrivial_sizes": sizes,
                "trivial_count": sum(1 for s in bbd.sizes if s == 1),
            }

        d = {
            "schema_version": SCHEMA_VERSION,
            "method": self.method,
            "clusterer": self.clusterer,
            "engine": self.engine,
            "k": self.k,
            "k_actual": self.k_actual,
            "seed": self.seed,
            "backend": _accel.backend(),
            "case": {
                "n_buses": self.network.n_buses,
                "n_lines": self.network.n_lines,
                "base_mva": self.network.base_mva,
            },
            "partition": [int(x) for x in self.partition.labels],
            "switched_lines": self.switched_lines(),
            "gamma_pre": float(self.gamma_pre),
            "gamma_post": float(self.gamma_post),
            "bbd_pre": bbd_summary(self.bbd_pre),
            "bbd_post": bbd_summary(self.bbd_post),
            "optimal": bool(self.optimal),
            "bigm_ok": self.bigm_ok,
            "stats": self.stats,
            "warnings": list(self.warnings),
        }
        if include_timings:
            d["timings"] = {k: float(v) for k, v in self.timings.items()}
        return d


def _cluster(wg, k, clusterer, seed) -> Partition:
    if clusterer == "fastgreedy":
        return fastgreedy_partition(wg, k)
    if clusterer == "spectral-ln":
        return spectral_partition(wg, k, mode="ln", seed=seed)
    if clusterer == "spectral-bn":
        return spectral_partition(wg, k, mode="bn", seed=seed)
    raise ValueError(f"unknown clusterer {clusterer!r}; pick one of {CLUSTERERS}")


def _solve_flow(net: Network, engine: str, warm=None):
    """(solution, congestion report, |flow| magnitudes) for either engine."""
    if engine == "dc":
        sol = dcflow.solve_dc(net)
        rep = dcflow.congestion(sol, net)
        mags = np.abs(sol.flows)
    else:
        sol = acflow.solve_ac(net, start=warm)
        rep = acflow.congestion_ac(sol, net)
        mags = np.maximum(np.abs(sol.s_from), np.abs(sol.s_to))
    return sol, rep, mags


def evaluate_only(net: Network, switch: SwitchSet, engine: str = "dc"):
    """Re-score an externally proposed switch set: (gamma, post-switching BBD)."""
    post = apply_switch(net, switch)
    _, rep, _ = _solve_flow(post, engine)
    return rep.gamma, bridge_block_decomposition(post)


def two_stage(net: Network, k: int, clusterer: str = "spectral-ln",
              solver: str = "milp", engine: str | None = None, seed: int = 0,
              gap: float = 1e-6, time_limit: float | None = None) -> TreePartitionReport:
    """Cluster the whole network into k parts, then pick the best tree of
    cross edges to keep."""
    if solver not in ("milp", "bruteforce"):
        raise ValueError(f"solver must be 'milp' or 'bruteforce', got {solver!r}")
    if engine is None:
        engine = "dc"
    if solver == "milp" and engine != "dc":
        raise ValueError("the MILP solver works with the DC engine only")
    if k < 2:
        raise ValueError("k must be at least 2")

    timings = {}
    warnings = []
    t0 = time.perf_counter()
    base_sol, base_rep, mags = _solve_flow(net, engine)
    timings["flow_pre"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    wg = flow_weighted_graph(net, mags)
    partition = _cluster(wg, k, clusterer, seed)
    repaired = ensure_connected_clusters(net, partition, weights=mags)
    if repaired.k != k:
        warnings.append(f"connectivity repair changed cluster count {k} -> {repaired.k}")
    timings["clustering"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    instance = make_instance(net, repaired, engine=engine, base=base_sol)
    if solver == "milp":
        solution = solve_milp(build_milp(instance), gap=gap, time_limit=time_limit)
        method = "two_stage_milp"
    else:
        solution = solve_bruteforce(instance)
        method = "two_stage_bf_dc" if engine == "dc" else "two_stage_bf_ac"
    timings["selection"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    bbd_pre = bridge_block_decomposition(net)
    bbd_post = bridge_block_decomposition(apply_switch(net, solution.switch))
    timings["decomposition"] = time.perf_counter() - t0

    return TreePartitionReport(
        method=method,
        clusterer=clusterer,
        engine=engine,
        k=k,
        k_actual=repaired.k,
        seed=seed,
        partition=repaired,
        switch=solution.switch,
        gamma_pre=base_rep.gamma,
        gamma_post=solution.gamma,
        bbd_pre=bbd_pre,
        bbd_post=bbd_post,
        network=net,
        optimal=solution.optimal,
        timings=timings,
        stats=solution.stats,
        warnings=warnings,
        bigm_ok=solution.bigm_ok,
    )


def _split_sides(net_cur: Network, cluster_buses: np.ndarray, block: np.ndarray,
                 block_sides: np.ndarray) -> np.ndarray:
    """Extend a bipartition of one bridge-block to its whole cluster.

    Every other block of the cluster hangs off the split block through a
    unique bridge (otherwise it would be part of it), so it inherits the
    side of the bus where that bridge enters.
    """
    side_of = {int(b): int(s) for b, s in zip(block, block_sides)}
    cluster_set = set(int(b) for b in cluster_buses)
    rest = np.array(sorted(cluster_set - set(side_of)), np.int64)
    if rest.size:
        sub = induced_subnetwork(net_cur, rest)
        comps = components(sub)
        block_set = set(side_of)
        comp_of = {int(rest[i]): ci for ci, comp in enumerate(comps) for i in comp}
        entry: dict[int, int] = {}
        for pos in range(net_cur.n_lines):
            a = int(net_cur.from_bus[pos])
            b = int(net_cur.to_bus[pos])
            if a in comp_of and b in block_set:
                entry.setdefault(comp_of[a], b)
            elif b in comp_of and a in block_set:
                entry.setdefault(comp_of[b], a)
        for ci, comp in enumerate(comps):
            if ci not in entry:
                raise TreepartError("cluster fragment with no attachment to the split block")
            for i in comp:
                side_of[int(rest[i])] = side_of[entry[ci]]
    sides = np.zeros(net_cur.n_buses, np.int64) - 1
    for b, s in side_of.items():
        sides[b] = s
    return sides


def recursive(net: Network, k: int, engine: str = "dc",
              clusterer: str = "spectral-ln", seed: int = 0) -> TreePartitionReport:
    """k-1 rounds of bipartitioning the current largest bridge-block.

    Each round clusters the block's induced subgraph into two, then keeps
    exactly one of the resulting cross edges - the one whose removal set
    leaves the lowest maximum congestion, evaluated on the full network.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if engine not in ("dc", "ac"):
        raise ValueError(f"engine must be 'dc' or 'ac', got {engine!r}")

    timings = {"flow": 0.0, "clustering": 0.0, "selection": 0.0}
    warnings = []
    stats = {"iterations": 0, "candidates_per_iteration": []}

    t0 = time.perf_counter()
    cur_sol, base_rep, mags = _solve_flow(net, engine)
    timings["flow"] += time.perf_counter() - t0
    gamma_pre = base_rep.gamma
    bbd_pre = bridge_block_decomposition(net)

    g_cur = net
    labels = np.zeros(net.n_buses, np.int64)
    next_label = 1
    switched: set[int] = set()
    cur_rep = base_rep

    for it in range(k - 1):
        bbd = bridge_block_decomposition(g_cur)
        blocks = sorted(bbd.blocks, key=lambda blk: (-len(blk), blk[0]))
        block = np.array(blocks[0], np.int64)
        if block.shape[0] < 2:
            warnings.append(f"iteration {it}: largest bridge-block is trivial, stopping")
            break
        cluster_id = int(labels[block[0]])
        cluster_buses = np.flatnonzero(labels == cluster_id)

        t0 = time.perf_counter()
        wg_full = flow_weighted_graph(g_cur, mags)
        wg_block = subgraph_weighted(wg_full, block)
        sub = induced_subnetwork(g_cur, block)
        try:
            bipart = _cluster(wg_block, 2, clusterer, seed + it)
        except ClusteringError as exc:
            warnings.append(f"iteration {it}: clustering failed ({exc}), stopping")
            break
        bipart = ensure_connected_clusters(sub, bipart, weights=wg_block.line_weights)
        timings["clustering"] += time.perf_counter() - t0
        if bipart.k != 2:
            warnings.append(
                f"iteration {it}: bipartition has {bipart.k} clusters after repair, stopping"
            )
            break

        sides = _split_sides(g_cur, cluster_buses, block, bipart.labels)
        in_block_pos = np.flatnonzero(
            (sides[g_cur.from_bus] >= 0)
            & (sides[g_cur.to_bus] >= 0)
            & (sides[g_cur.from_bus] != sides[g_cur.to_bus])
        )
        candidate_ids = sorted(int(g_cur.line_ids[pos]) for pos in in_block_pos)
        stats["candidates_per_iteration"].append(len(candidate_ids))

        t0 = time.perf_counter()
        best = None
        skipped = 0
        for kept in candidate_ids:
            sw = SwitchSet(set(candidate_ids) - {kept})
            try:
                post = apply_switch(g_cur, sw)
                sol, rep, new_mags = _solve_flow(
                    post, engine, warm=cur_sol if engine == "ac" else None
                )
            except acflow.ConvergenceError:
                skipped += 1
                continue
            if best is None or rep.gamma < best[0] - GAMMA_TIE_TOL:
                best = (rep.gamma, kept, sw, post, sol, rep, new_mags)
        timings["selection"] += time.perf_counter() - t0
        if best is None:
            warnings.append(
                f"iteration {it}: no candidate converged ({skipped} skipped), "
                "stopping with a partial result"
            )
            break

        _, kept, sw, g_cur, cur_sol, cur_rep, mags = best
        switched |= sw.lines
        new_side = sides == 1
        labels[new_side] = next_label
        next_label += 1
        stats["iterations"] += 1

    partition = compact_partition(labels)
    bbd_post = bridge_block_decomposition(g_cur)
    return TreePartitionReport(
        method=f"recursive_{engine}",
        clusterer=clusterer,
        engine=engine,
        k=k,
        k_actual=partition.k,
        seed=seed,
        partition=partition,
        switch=SwitchSet(switched),
        gamma_pre=gamma_pre,
        gamma_post=cur_rep.gamma,
        bbd_pre=bbd_pre,
        bbd_post=bbd_post,
        network=net,
        optimal=False,
        timings=timings,
        stats=stats,
        warnings=warnings,
    )
