"""Network model and graph-theoretic core.

A transmission grid is held as a :class:`Network`: immutable per-bus and
per-line arrays. Lines keep stable integer ids across switching, so a
:class:`SwitchSet` produced on one network stays meaningful on derived ones.
Topology is treated as an undirected multigraph; line direction is only
bookkeeping for flow signs.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterator, Sequence

import numpy as np

from . import _accel


class TreepartError(Exception):
    """Base class for errors raised by this package."""


class DisconnectedError(TreepartError):
    """A network (or a post-switching network) is not connected."""

    def __init__(self, message: str, components: list[list[int]] | None = None):
        super().__init__(message)
        self.components = components or []


@dataclass(frozen=True)
class AcData:
    """Per-bus and per-line data only the AC engine needs (all per-unit)."""

    bus_type: np.ndarray   # 1=PQ, 2=PV, 3=slack
    q: np.ndarray          # net reactive injection (meaningful at PQ buses)
    qd: np.ndarray         # reactive demand, used when a PV bus hits a Q limit
    qmin: np.ndarray       # aggregate generator Q limits at the bus
    qmax: np.ndarray
    vset: np.ndarray       # voltage setpoint at PV/slack buses
    gs: np.ndarray         # shunt conductance / susceptance
    bs: np.ndarray
    resistance: np.ndarray
    reactance: np.ndarray
    charging: np.ndarray
    tap: np.ndarray        # 0 means "no transformer" (ratio 1)
    shift: np.ndarray      # radians


@dataclass(frozen=True)
class Network:
    """Connected transmission network with fixed injections.

    Line arrays are position-indexed; ``line_ids[pos]`` gives the stable id
    used in every public interface (switch sets, bridges, reports).
    """

    bus_ids: np.ndarray       # original bus numbers, position-indexed
    p: np.ndarray             # net active injection per bus (per-unit)
    from_bus: np.ndarray      # 0-based bus positions
    to_bus: np.ndarray
    susceptance: np.ndarray   # 1/x per line, > 0
    capacity: np.ndarray      # per-unit rating, +inf where unlimited
    unlimited: np.ndarray     # bool mask
    line_ids: np.ndarray
    reference: int            # bus position whose angle is pinned to 0
    base_mva: float = 100.0
    ac: AcData | None = None

    @property
    def n_buses(self) -> int:
        return int(self.bus_ids.shape[0])

    @property
    def n_lines(self) -> int:
        return int(self.line_ids.shape[0])

    def line_pos(self, line_id: int) -> int:
        """Position of a stable line id in the per-line arrays."""
        pos = int(np.searchsorted(self.line_ids, line_id))
        if pos >= self.n_lines or self.line_ids[pos] != line_id:
            raise KeyError(f"unknown line id {line_id}")
        return pos

    def adjacency(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """CSR adjacency (indptr, neighbor bus, incident line position)."""
        return build_adjacency(self.n_buses, self.from_bus, self.to_bus)


def build_adjacency(n: int, from_bus: np.ndarray, to_bus: np.ndarray):
    """Undirected CSR adjacency; every line appears at both endpoints."""
    m = from_bus.shape[0]
    ends = np.concatenate([from_bus, to_bus])
    other = np.concatenate([to_bus, from_bus])
    eids = np.concatenate([np.arange(m, dtype=np.int64)] * 2)
    order = np.argsort(ends, kind="stable")
    indptr = np.zeros(n + 1, np.int64)
    np.cumsum(np.bincount(ends, minlength=n), out=indptr[1:])
    return indptr, other[order], eids[order]


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


def make_network(
    bus_ids,
    p,
    from_bus,
    to_bus,
    susceptance,
    capacity,
    unlimited,
    line_ids,
    reference: int,
    base_mva: float = 100.0,
    ac: AcData | None = None,
    require_connected: bool = True,
) -> Network:
    """Validate raw arrays and assemble an immutable :class:`Network`."""
    bus_ids = _freeze(np.asarray(bus_ids, np.int64))
    p = _freeze(np.asarray(p, np.float64))
    from_bus = _freeze(np.asarray(from_bus, np.int64))
    to_bus = _freeze(np.asarray(to_bus, np.int64))
    susceptance = _freeze(np.asarray(susceptance, np.float64))
    capacity = _freeze(np.asarray(capacity, np.float64))
    unlimited = _freeze(np.asarray(unlimited, bool))
    line_ids = _freeze(np.asarray(line_ids, np.int64))

    n = bus_ids.shape[0]
    if p.shape[0] != n:
        raise ValueError("injection vector length does not match bus count")
    if not (0 <= reference < n):
        raise ValueError("reference bus out of range")
    if np.any(susceptance <= 0):
        bad = int(line_ids[np.argmax(susceptance <= 0)])
        raise ValueError(f"line {bad} has non-positive susceptance")
    if np.any(np.diff(line_ids) <= 0):
        raise ValueError("line ids must be strictly increasing")
    net = Network(
        bus_ids=bus_ids,
        p=p,
        from_bus=from_bus,
        to_bus=to_bus,
        susceptance=susceptance,
        capacity=capacity,
        unlimited=unlimited,
        line_ids=line_ids,
        reference=int(reference),
        base_mva=float(base_mva),
        ac=ac,
    )
    if require_connected:
        comps = components(net)
        if len(comps) != 1:
            raise DisconnectedError(
                f"network is disconnected ({len(comps)} components): "
                + "; ".join(str([int(net.bus_ids[b]) for b in c[:8]]) for c in comps),
                components=comps,
            )
    return net


# ---------------------------------------------------------------------------
# Partitions, reduced graphs, switch sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Partition:
    """Assignment of every bus to one of k clusters (labels 0..k-1)."""

    labels: np.ndarray
    k: int

    def __post_init__(self):
        labels = _freeze(np.asarray(self.labels, np.int64))
        object.__setattr__(self, "labels", labels)
        used = np.unique(labels)
        if used.shape[0] != self.k or used[0] != 0 or used[-1] != self.k - 1:
            raise ValueError("cluster labels must cover exactly 0..k-1")

    def clusters(self) -> list[np.ndarray]:
        return [np.flatnonzero(self.labels == c) for c in range(self.k)]


def compact_partition(labels: Sequence[int]) -> Partition:
    """Relabel arbitrary cluster tags to 0..k-1 in order of first appearance."""
    labels = np.asarray(labels, np.int64)
    _, first = np.unique(labels, return_index=True)
    order = labels[np.sort(first)]
    remap = {int(tag): i for i, tag in enumerate(order)}
    return Partition(np.array([remap[int(t)] for t in labels], np.int64), len(remap))


@dataclass(frozen=True)
class ReducedGraph:
    """Multigraph of clusters; one edge per cross line, multiplicity kept."""

    k: int
    endpoints: np.ndarray  # (mc, 2) cluster pair, oriented as the line is
    line_ids: np.ndarray   # (mc,) original line ids

    @property
    def n_edges(self) -> int:
        return int(self.line_ids.shape[0])


@dataclass(frozen=True)
class BridgeBlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]  # bus positions, each block sorted
    bridges: tuple[int, ...]             # line ids
    block_of: np.ndarray                 # bus position -> block index

    @property
    def sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    def nontrivial_sizes(self) -> list[int]:
        """Sizes of blocks with at least 2 buses, largest first."""
        return sorted((s for s in self.sizes if s >= 2), reverse=True)


@dataclass(frozen=True)
class SwitchSet:
    """Lines to take out of service; ids refer to Network.line_ids."""

    lines: frozenset[int] = field(default_factory=frozenset)

    def __init__(self, lines=()):
        object.__setattr__(self, "lines", frozenset(int(x) for x in lines))

    def sorted(self) -> list[int]:
        return sorted(self.lines)

    def __len__(self) -> int:
        return len(self.lines)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def components(net: Network, removed: SwitchSet | None = None) -> list[list[int]]:
    """Connected components (bus positions) after removing the given lines."""
    indptr, adj_node, adj_edge = net.adjacency()
    alive = np.ones(net.n_lines, bool)
    if removed:
        for lid in removed.lines:
            alive[net.line_pos(lid)] = False
    labels = _accel.component_labels(net.n_buses, indptr, adj_node, adj_edge, alive)
    ncomp = int(labels.max()) + 1 if net.n_buses else 0
    return [list(np.flatnonzero(labels == c)) for c in range(ncomp)]


def find_bridges(net: Network) -> list[int]:
    """All cut edges, as sorted line ids."""
    indptr, adj_node, adj_edge = net.adjacency()
    mask = _accel.bridge_mask(net.n_buses, net.n_lines, indptr, adj_node, adj_edge)
    return [int(net.line_ids[e]) for e in np.flatnonzero(mask)]


def bridge_block_decomposition(net: Network) -> BridgeBlockDecomposition:
    """Blocks = connected components once every bridge is removed."""
    bridges = find_bridges(net)
    indptr, adj_node, adj_edge = net.adjacency()
    alive = np.ones(net.n_lines, bool)
    for lid in bridges:
        alive[net.line_pos(lid)] = False
    labels = _accel.component_labels(net.n_buses, indptr, adj_node, adj_edge, alive)
    nblocks = int(labels.max()) + 1 if net.n_buses else 0
    blocks = tuple(
        tuple(int(b) for b in np.flatnonzero(labels == c)) for c in range(nblocks)
    )
    return BridgeBlockDecomposition(blocks=blocks, bridges=tuple(bridges), block_of=_freeze(labels))


def cross_edges(net: Network, partition: Partition) -> ReducedGraph:
    """Classify lines against a partition and build the reduced multigraph."""
    if partition.labels.shape[0] != net.n_buses:
        raise ValueError("partition does not match network size")
    cu = partition.labels[net.from_bus]
    cv = partition.labels[net.to_bus]
    cross = cu != cv
    endpoints = np.stack([cu[cross], cv[cross]], axis=1)
    return ReducedGraph(
        k=partition.k,
        endpoints=_freeze(endpoints),
        line_ids=_freeze(net.line_ids[cross]),
    )


def _clusters_internally_connected(net: Network, partition: Partition) -> bool:
    indptr, adj_node, adj_edge = net.adjacency()
    internal = partition.labels[net.from_bus] == partition.labels[net.to_bus]
    labels = _accel.component_labels(net.n_buses, indptr, adj_node, adj_edge, internal)
    # internally connected <=> each cluster maps onto exactly one component
    for c in range(partition.k):
        members = np.flatnonzero(partition.labels == c)
        if np.unique(labels[members]).shape[0] != 1:
            return False
    return True


def _reduced_connected(reduced: ReducedGraph) -> bool:
    parent = list(range(reduced.k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in reduced.endpoints:
        parent[find(int(u))] = find(int(v))
    return len({find(c) for c in range(reduced.k)}) == 1


def is_tree_partition(net: Network, partition: Partition) -> bool:
    """True iff the reduced graph is a tree and every cluster is connected.

    Cluster-internal connectivity is part of the check: without it the
    post-switching network could fall apart even though the reduced graph
    looks like a tree.
    """
    reduced = cross_edges(net, partition)
    if reduced.n_edges != partition.k - 1:
        return False
    if not _reduced_connected(reduced):
        return False
    return _clusters_internally_connected(net, partition)


def apply_switch(net: Network, switch: SwitchSet) -> Network:
    """Remove the given lines, keeping injections and bus data unchanged."""
    if not switch.lines:
        return net
    keep = np.ones(net.n_lines, bool)
    for lid in switch.lines:
        keep[net.line_pos(lid)] = False
    ac = net.ac
    if ac is not None:
        ac = replace(
            ac,
            resistance=_freeze(ac.resistance[keep]),
            reactance=_freeze(ac.reactance[keep]),
            charging=_freeze(ac.charging[keep]),
            tap=_freeze(ac.tap[keep]),
            shift=_freeze(ac.shift[keep]),
        )
    out = replace(
        net,
        from_bus=_freeze(net.from_bus[keep]),
        to_bus=_freeze(net.to_bus[keep]),
        susceptance=_freeze(net.susceptance[keep]),
        capacity=_freeze(net.capacity[keep]),
        unlimited=_freeze(net.unlimited[keep]),
        line_ids=_freeze(net.line_ids[keep]),
        ac=ac,
    )
    comps = components(out)
    if len(comps) != 1:
        raise DisconnectedError(
            f"switching {sorted(switch.lines)} disconnects the network into "
            f"{len(comps)} components",
            components=comps,
        )
    return out


def induced_subnetwork(net: Network, buses: np.ndarray) -> Network:
    """Subnetwork on a bus subset with every line internal to it.

    Injections are carried over untouched (they will generally not balance),
    so the result is meant for structural work - clustering, connectivity -
    not for flow solves.
    """
    buses = np.asarray(buses, np.int64)
    pos = -np.ones(net.n_buses, np.int64)
    pos[buses] = np.arange(buses.shape[0])
    keep = (pos[net.from_bus] >= 0) & (pos[net.to_bus] >= 0)
    ref = int(pos[net.reference]) if pos[net.reference] >= 0 else 0
    ac = net.ac
    if ac is not None:
        ac = AcData(
            bus_type=_freeze(ac.bus_type[buses]),
            q=_freeze(ac.q[buses]),
            qd=_freeze(ac.qd[buses]),
            qmin=_freeze(ac.qmin[buses]),
            qmax=_freeze(ac.qmax[buses]),
            vset=_freeze(ac.vset[buses]),
            gs=_freeze(ac.gs[buses]),
            bs=_freeze(ac.bs[buses]),
            resistance=_freeze(ac.resistance[keep]),
            reactance=_freeze(ac.reactance[keep]),
            charging=_freeze(ac.charging[keep]),
            tap=_freeze(ac.tap[keep]),
            shift=_freeze(ac.shift[keep]),
        )
    return Network(
        bus_ids=_freeze(net.bus_ids[buses]),
        p=_freeze(net.p[buses]),
        from_bus=_freeze(pos[net.from_bus[keep]]),
        to_bus=_freeze(pos[net.to_bus[keep]]),
        susceptance=_freeze(net.susceptance[keep]),
        capacity=_freeze(net.capacity[keep]),
        unlimited=_freeze(net.unlimited[keep]),
        line_ids=_freeze(net.line_ids[keep]),
        reference=ref,
        base_mva=net.base_mva,
        ac=ac,
    )


def kirchhoff_tree_count(reduced: ReducedGraph) -> int:
    """Number of spanning trees by the matrix-tree determinant."""
    k = reduced.k
    if k == 1:
        return 1
    lap = np.zeros((k, k))
    for u, v in reduced.endpoints:
        u = int(u)
        v = int(v)
        if u == v:
            continue
        lap[u, u] += 1
        lap[v, v] += 1
        lap[u, v] -= 1
        lap[v, u] -= 1
    minor = lap[1:, 1:]
    return int(round(float(np.linalg.det(minor))))


def enumerate_spanning_trees(reduced: ReducedGraph) -> Iterator[frozenset[int]]:
    """Stream every spanning tree of the reduced multigraph exactly once.

    Include/exclude backtracking over edges in line-id order; a branch is
    pruned as soon as the not-yet-excluded edges can no longer connect all
    clusters. Parallel edges yield distinct trees. Raises DisconnectedError
    up front if the reduced graph is not connected.
    """
    k = reduced.k
    if not _reduced_connected(reduced):
        raise DisconnectedError("reduced graph is not connected")
    order = np.argsort(reduced.line_ids)
    edges = [(int(reduced.endpoints[i, 0]), int(reduced.endpoints[i, 1]), int(reduced.line_ids[i])) for i in order]
    mc = len(edges)

    if k > 1 and _accel.NUMBA_ENABLED:
        count = kirchhoff_tree_count(reduced)
        if 0 < count <= 2_000_000:
            eu = np.array([e[0] for e in edges], np.int64)
            ev = np.array([e[1] for e in edges], np.int64)
            lids = np.array([e[2] for e in edges], np.int64)
            table = np.empty((count, k - 1), np.int64)
            got = int(_accel.spanning_trees_table(k, eu, ev, table))
            if got != count:
                raise TreepartError(
                    f"tree enumeration found {got} trees, determinant says {count}"
                )
            for row in table:
                yield frozenset(int(lids[i]) for i in row)
            return

    def connected_with(available_from: int, chosen_roots: list[int]) -> bool:
        parent = chosen_roots.copy()

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        nc = len({find(c) for c in range(k)})
        for u, v, _ in edges[available_from:]:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                nc -= 1
                if nc == 1:
                    return True
        return nc == 1

    def rec(pos: int, parent: list[int], n_chosen: int, chosen: list[int]) -> Iterator[frozenset[int]]:
        if n_chosen == k - 1:
            yield frozenset(chosen)
            return
        if pos == mc or mc - pos < k - 1 - n_chosen:
            return
        u, v, lid = edges[pos]

        def find(x, par):
            while par[x] != x:
                par[x] = par[par[x]]
                x = par[x]
            return x

        ru = find(u, parent)
        rv = find(v, parent)
        if ru != rv:
            child = parent.copy()
            child[ru] = rv
            chosen.append(lid)
            yield from rec(pos + 1, child, n_chosen + 1, chosen)
            chosen.pop()
        # exclude this edge only if the rest can still span
        if connected_with(pos + 1, parent):
            yield from rec(pos + 1, parent, n_chosen, chosen)

    if k == 1:
        yield frozenset()
        return
    yield from rec(0, list(range(k)), 0, [])
