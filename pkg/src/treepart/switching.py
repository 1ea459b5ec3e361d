"""Choosing which cross edges to switch off, given a partition.

Both solvers pick a spanning tree of the reduced multigraph and switch off
every other cross edge, minimizing the post-switching maximum congestion:

* brute force - streams all spanning trees and evaluates each candidate with
  the DC or AC engine on the full network;
* MILP (DC only) - an exact mixed-integer formulation with one binary per
  cross edge, single-commodity-flow connectivity rows and big-M switched
  DC physics, handed to HiGHS through scipy.

The returned gamma is always re-computed with a clean flow solve on the
decoded post-switching network, never read off solver variables.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.optimize import Bounds, LinearConstraint, milp

from . import acflow, dcflow
from .grid import (
    DisconnectedError,
    Network,
    Partition,
    ReducedGraph,
    SwitchSet,
    TreepartError,
    apply_switch,
    cross_edges,
    enumerate_spanning_trees,
    _clusters_internally_connected,
    _reduced_connected,
)

log = logging.getLogger(__name__)

GAMMA_TIE_TOL = 1e-12
BIG_M_CAPACITY_FACTOR = 4.0


class SwitchingError(TreepartError):
    pass


@dataclass(frozen=True)
class SwitchingInstance:
    network: Network
    partition: Partition
    reduced: ReducedGraph
    engine: str                      # "dc" | "ac"
    base: acflow.AcSolution | dcflow.DcSolution | None = None


@dataclass(frozen=True)
class SwitchingSolution:
    kept_tree: tuple[int, ...]       # cross-edge line ids forming the tree
    switch: SwitchSet
    gamma: float
    flow: dcflow.DcSolution | acflow.AcSolution
    optimal: bool
    stats: dict
    bigm_ok: bool | None = None      # MILP only


def make_instance(net: Network, partition: Partition, engine: str = "dc",
                  base=None) -> SwitchingInstance:
    """Validate the contract and bundle everything the solvers need."""
    if engine not in ("dc", "ac"):
        raise ValueError(f"engine must be 'dc' or 'ac', got {engine!r}")
    if partition.k < 2:
        raise SwitchingError("need at least 2 clusters to select bridges")
    if not _clusters_internally_connected(net, partition):
        raise SwitchingError(
            "every cluster must induce a connected subgraph "
            "(run ensure_connected_clusters first)"
        )
    reduced = cross_edges(net, partition)
    if not _reduced_connected(reduced):
        raise DisconnectedError("reduced graph is not connected")
    return SwitchingInstance(network=net, partition=partition, reduced=reduced,
                             engine=engine, base=base)


def _evaluate(instance: SwitchingInstance, switch: SwitchSet):
    """(gamma, flow solution) on the post-switching network."""
    post = apply_switch(instance.network, switch)
    if instance.engine == "dc":
        sol = dcflow.solve_dc(post)
        return dcflow.congestion(sol, post).gamma, sol
    base = instance.base if isinstance(instance.base, acflow.AcSolution) else None
    try:
        sol = acflow.solve_ac(post, start=base)
    except acflow.ConvergenceError:
        if base is None:
            raise
        sol = acflow.solve_ac(post)  # retry from flat start
    return acflow.congestion_ac(sol, post).gamma, sol


def solve_bruteforce(instance: SwitchingInstance) -> SwitchingSolution:
    """Evaluate gamma for every spanning tree of the reduced graph.

    Ties within 1e-12 go to the lexicographically smallest kept-tree id set.
    AC candidates that fail to converge are skipped and counted; the result
    is only marked optimal if none were skipped.
    """
    all_cross = frozenset(int(x) for x in instance.reduced.line_ids)
    best = None
    evaluated = 0
    skipped = 0
    for tree in enumerate_spanning_trees(instance.reduced):
        kept = tuple(sorted(tree))
        switch = SwitchSet(all_cross - tree)
        try:
            gamma, flow = _evaluate(instance, switch)
        except acflow.ConvergenceError:
            skipped += 1
            continue
        evaluated += 1
        if (
            best is None
            or gamma < best[0] - GAMMA_TIE_TOL
            or (gamma <= best[0] + GAMMA_TIE_TOL and kept < best[1])
        ):
            best = (gamma, kept, switch, flow)
    if best is None:
        raise SwitchingError(
            f"no feasible spanning tree: all {skipped} candidates failed to converge"
        )
    gamma, kept, switch, flow = best
    return SwitchingSolution(
        kept_tree=kept,
        switch=switch,
        gamma=float(gamma),
        flow=flow,
        optimal=(instance.engine == "dc") or skipped == 0,
        stats={"trees_evaluated": evaluated, "trees_skipped": skipped},
    )


# ---------------------------------------------------------------------------
# MILP formulation (DC)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MilpModel:
    instance: SwitchingInstance
    objective: np.ndarray
    constraints: dict[str, LinearConstraint]
    integrality: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    big_m: np.ndarray            # per cross edge
    cross_pos: np.ndarray        # line positions of the cross edges
    # variable layout
    idx_gamma: int
    idx_f: slice
    idx_theta: slice
    idx_y: slice
    idx_q: slice

    @property
    def n_binary(self) -> int:
        return int(self.integrality.sum())

    @property
    def n_continuous(self) -> int:
        return int(self.integrality.shape[0] - self.n_binary)


def build_milp(instance: SwitchingInstance) -> MilpModel:
    """Assemble the exact DC switching model.

    Variables: gamma, per-line flow f, per-bus angle theta, per-cross-edge
    activity binary y and commodity flow q. The published switching rows
    are implemented as the standard big-M disjunction
        |f - b (th_i - th_j)| <= M (1-y),   |f| <= M y,
    which reduces to the DC equality on active cross edges and to f = 0 on
    switched ones. M is four times the line capacity.
    """
    if instance.engine != "dc":
        raise SwitchingError("the MILP solver covers the DC engine only")
    net = instance.network
    red = instance.reduced
    n, m, mc = net.n_buses, net.n_lines, red.n_edges
    k = instance.partition.k

    id_to_pos = {int(lid): i for i, lid in enumerate(net.line_ids)}
    cross_pos = np.array([id_to_pos[int(lid)] for lid in red.line_ids], np.int64)
    is_cross = np.zeros(m, bool)
    is_cross[cross_pos] = True

    finite_caps = net.capacity[~net.unlimited]
    fallback = BIG_M_CAPACITY_FACTOR * (float(finite_caps.max()) if finite_caps.size else 1.0)
    big_m = np.where(
        net.unlimited[cross_pos],
        fallback,
        BIG_M_CAPACITY_FACTOR * net.capacity[cross_pos],
    )

    nv = 1 + m + n + mc + mc
    idx_gamma = 0
    idx_f = slice(1, 1 + m)
    idx_theta = slice(1 + m, 1 + m + n)
    idx_y = slice(1 + m + n, 1 + m + n + mc)
    idx_q = slice(1 + m + n + mc, nv)

    cons: dict[str, LinearConstraint] = {}

    def mat(rows, cols, vals, nrows):
        return sp.csr_matrix((vals, (rows, cols)), shape=(nrows, nv))

    # gamma >= |f|/c on capacity-limited lines
    lim = np.flatnonzero(~net.unlimited)
    nl = lim.shape[0]
    rows = np.concatenate([np.arange(nl)] * 2 + [np.arange(nl, 2 * nl)] * 2)
    cols = np.concatenate([np.zeros(nl, np.int64), 1 + lim, np.zeros(nl, np.int64), 1 + lim])
    vals = np.concatenate([np.ones(nl), -1.0 / net.capacity[lim],
                           np.ones(nl), 1.0 / net.capacity[lim]])
    cons["congestion"] = LinearConstraint(mat(rows, cols, vals, 2 * nl),
                                          np.zeros(2 * nl), np.full(2 * nl, np.inf))

    # spanning tree: cardinality + single-commodity flow from cluster 0
    rows = np.zeros(mc, np.int64)
    cols = 1 + m + n + np.arange(mc)
    cons["tree_cardinality"] = LinearConstraint(mat(rows, cols, np.ones(mc), 1),
                                                [k - 1.0], [k - 1.0])

    rows = np.concatenate([red.endpoints[:, 0], red.endpoints[:, 1]])
    cols = np.concatenate([1 + m + n + mc + np.arange(mc)] * 2)
    vals = np.concatenate([np.ones(mc), -np.ones(mc)])
    rhs = np.full(k, -1.0)
    rhs[0] = k - 1.0
    cons["commodity_balance"] = LinearConstraint(mat(rows, cols, vals, k), rhs, rhs)

    # |q| <= (k-1) y
    r = np.arange(mc)
    rows = np.concatenate([r, r, mc + r, mc + r])
    cols = np.concatenate([1 + m + n + mc + r, 1 + m + n + r,
                           1 + m + n + mc + r, 1 + m + n + r])
    vals = np.concatenate([np.ones(mc), -(k - 1.0) * np.ones(mc),
                           np.ones(mc), (k - 1.0) * np.ones(mc)])
    lb = np.concatenate([np.full(mc, -np.inf), np.zeros(mc)])
    ub = np.concatenate([np.zeros(mc), np.full(mc, np.inf)])
    cons["commodity_capacity"] = LinearConstraint(mat(rows, cols, vals, 2 * mc), lb, ub)

    # cross edges: f - b dtheta +/- M(1-y) disjunction and |f| <= M y
    fb = net.from_bus[cross_pos]
    tb = net.to_bus[cross_pos]
    bsus = net.susceptance[cross_pos]
    rows = []
    cols = []
    vals = []
    lb = []
    ub = []
    row = 0
    for e in range(mc):
        fcol = 1 + int(cross_pos[e])
        icol = 1 + m + int(fb[e])
        jcol = 1 + m + int(tb[e])
        ycol = 1 + m + n + e
        bm = float(big_m[e])
        bv = float(bsus[e])
        # f - b(ti - tj) + M y <= M
        rows += [row] * 4
        cols += [fcol, icol, jcol, ycol]
        vals += [1.0, -bv, bv, bm]
        lb.append(-np.inf)
        ub.append(bm)
        row += 1
        # f - b(ti - tj) - M y >= -M
        rows += [row] * 4
        cols += [fcol, icol, jcol, ycol]
        vals += [1.0, -bv, bv, -bm]
        lb.append(-bm)
        ub.append(np.inf)
        row += 1
        # f - M y <= 0
        rows += [row] * 2
        cols += [fcol, ycol]
        vals += [1.0, -bm]
        lb.append(-np.inf)
        ub.append(0.0)
        row += 1
        # f + M y >= 0
        rows += [row] * 2
        cols += [fcol, ycol]
        vals += [1.0, bm]
        lb.append(0.0)
        ub.append(np.inf)
        row += 1
    cons["cross_switching"] = LinearConstraint(
        mat(np.array(rows), np.array(cols), np.array(vals, float), row),
        np.array(lb), np.array(ub),
    )

    # internal edges keep plain DC physics
    internal = np.flatnonzero(~is_cross)
    ni = internal.shape[0]
    if ni:
        r = np.arange(ni)
        rows = np.concatenate([r, r, r])
        cols = np.concatenate([1 + internal, 1 + m + net.from_bus[internal],
                               1 + m + net.to_bus[internal]])
        vals = np.concatenate([np.ones(ni), -net.susceptance[internal],
                               net.susceptance[internal]])
        cons["internal_flow"] = LinearConstraint(mat(rows, cols, vals, ni),
                                                 np.zeros(ni), np.zeros(ni))

    # nodal balance: sum(out) - sum(in) = p
    rows = np.concatenate([net.from_bus, net.to_bus])
    cols = np.concatenate([1 + np.arange(m)] * 2)
    vals = np.concatenate([np.ones(m), -np.ones(m)])
    cons["nodal_balance"] = LinearConstraint(mat(rows, cols, vals, n), net.p, net.p)

    lower = np.full(nv, -np.inf)
    upper = np.full(nv, np.inf)
    lower[idx_gamma] = 0.0
    lower[idx_y] = 0.0
    upper[idx_y] = 1.0
    lower[idx_q] = -(k - 1.0)
    upper[idx_q] = k - 1.0
    ref = 1 + m + net.reference
    lower[ref] = 0.0
    upper[ref] = 0.0

    objective = np.zeros(nv)
    objective[idx_gamma] = 1.0
    integrality = np.zeros(nv)
    integrality[idx_y] = 1

    return MilpModel(
        instance=instance,
        objective=objective,
        constraints=cons,
        integrality=integrality,
        lower=lower,
        upper=upper,
        big_m=big_m,
        cross_pos=cross_pos,
        idx_gamma=idx_gamma,
        idx_f=idx_f,
        idx_theta=idx_theta,
        idx_y=idx_y,
        idx_q=idx_q,
    )


def _check_big_m(model: MilpModel, post_net: Network, solution: dcflow.DcSolution,
                 switch: SwitchSet) -> tuple[bool, list[int]]:
    """A-posteriori validity of the 4x-capacity big-M rule.

    Using the true post-switching angles, a switched-off cross edge must
    satisfy |b (th_i - th_j)| <= M, and a kept one |f| <= M; otherwise the
    fixed big-M may have cut off the optimum.
    """
    net = model.instance.network
    theta = solution.angles
    violations = []
    for e, pos in enumerate(model.cross_pos):
        lid = int(net.line_ids[pos])
        i, j = int(net.from_bus[pos]), int(net.to_bus[pos])
        implied = abs(net.susceptance[pos] * (theta[i] - theta[j]))
        if implied > model.big_m[e] + 1e-9:
            violations.append(lid)
    return (not violations), violations


def solve_milp(model: MilpModel, gap: float = 1e-6,
               time_limit: float | None = None) -> SwitchingSolution:
    """Solve the model with HiGHS and decode/re-verify the solution.

    Returns the incumbent with ``optimal=False`` when the time limit ends
    the search early; raises if no incumbent exists at all.
    """
    options = {"mip_rel_gap": gap, "presolve": True}
    if time_limit is not None:
        options["time_limit"] = float(time_limit)
    res = milp(
        c=model.objective,
        constraints=list(model.constraints.values()),
        integrality=model.integrality,
        bounds=Bounds(model.lower, model.upper),
        options=options,
    )
    if res.x is None:
        raise SwitchingError(f"MILP solve failed: {res.message}")

    net = model.instance.network
    red = model.instance.reduced
    y = res.x[model.idx_y]
    kept_mask = y > 0.5
    kept_ids = tuple(sorted(int(red.line_ids[e]) for e in np.flatnonzero(kept_mask)))
    if len(kept_ids) != model.instance.partition.k - 1:
        raise SwitchingError(f"decoded {len(kept_ids)} active cross edges, "
                             f"expected {model.instance.partition.k - 1}")
    switch = SwitchSet(set(int(x) for x in red.line_ids) - set(kept_ids))

    post = apply_switch(net, switch)
    flow = dcflow.solve_dc(post)
    gamma = dcflow.congestion(flow, post).gamma
    milp_gamma = float(res.x[model.idx_gamma])
    if abs(milp_gamma - gamma) > 1e-5:
        log.warning("MILP objective %.6g differs from re-evaluated gamma %.6g",
                    milp_gamma, gamma)

    bigm_ok, violations = _check_big_m(model, post, flow, switch)
    if not bigm_ok:
        log.warning("big-M check failed on cross edges %s; the reported optimum "
                    "may be conservative", violations)

    return SwitchingSolution(
        kept_tree=kept_ids,
        switch=switch,
        gamma=float(gamma),
        flow=flow,
        optimal=bool(res.status == 0),
        stats={
            "milp_status": int(res.status),
            "milp_gamma": milp_gamma,
            "mip_gap": float(getattr(res, "mip_gap", np.nan)),
            "mip_nodes": int(getattr(res, "mip_node_count", -1)),
            "bigm_violations": violations,
        },
        bigm_ok=bigm_ok,
    )


def dump_lp(model: MilpModel) -> str:
    """Plain-text LP-format dump of the model, for debugging."""
    net = model.instance.network
    red = model.instance.reduced
    names = ["gamma"]
    names += [f"f_{int(lid)}" for lid in net.line_ids]
    names += [f"th_{int(b)}" for b in net.bus_ids]
    names += [f"y_{int(lid)}" for lid in red.line_ids]
    names += [f"q_{int(lid)}" for lid in red.line_ids]

    def term(coef, var):
        sign = "+" if coef >= 0 else "-"
        return f" {sign} {abs(coef):.12g} {var}"

    out = ["\\ tree-partition switching model", "Minimize", " obj: gamma", "Subject To"]
    ridx = 0
    for name, con in model.constraints.items():
        a = sp.csr_matrix(con.A)
        lb = np.atleast_1d(con.lb).astype(float)
        ub = np.atleast_1d(con.ub).astype(float)
        for r in range(a.shape[0]):
            row = a.getrow(r)
            expr = "".join(term(v, names[c]) for c, v in zip(row.indices, row.data))
            if lb[r] == ub[r]:
                out.append(f" {name}_{r}:{expr} = {lb[r]:.12g}")
            else:
                if np.isfinite(ub[r]):
                    out.append(f" {name}_{r}:{expr} <= {ub[r]:.12g}")
                if np.isfinite(lb[r]):
                    out.append(f" {name}_{r}_lo:{expr} >= {lb[r]:.12g}")
            ridx += 1
    out.append("Bounds")
    for i, nm in enumerate(names):
        lo, hi = model.lower[i], model.upper[i]
        if lo == hi:
            out.append(f" {nm} = {lo:.12g}")
        elif np.isinf(lo) and np.isinf(hi):
            out.append(f" {nm} free")
        else:
            lo_s = "-inf" if np.isinf(lo) else f"{lo:.12g}"
            hi_s = "+inf" if np.isinf(hi) else f"{hi:.12g}"
            out.append(f" {lo_s} <= {nm} <= {hi_s}")
    out.append("Binaries")
    out.append(" " + " ".join(f"y_{int(lid)}" for lid in red.line_ids))
    out.append("End")
    return "\n".join(out) + "\n"
