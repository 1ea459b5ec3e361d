"""Cluster identification on the flow-weighted network.

The partition that later becomes a tree partition is found on a weighted
graph whose edge weights are absolute pre-switching flows. Three heuristics
are provided: spectral embeddings of the normalized Laplacian or of the
normalized modularity matrix followed by seeded k-means, and hierarchical
greedy modularity agglomeration cut at exactly k communities.

All outputs are deterministic for fixed inputs and seed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from . import _accel
from .grid import Network, Partition, TreepartError, build_adjacency, compact_partition

log = logging.getLogger(__name__)

KMEANS_RESTARTS = 10
KMEANS_ITERS = 100


class ClusteringError(TreepartError):
    pass


@dataclass(frozen=True)
class WeightedGraph:
    """Symmetric non-negative weight matrix plus derived quantities."""

    weights: np.ndarray   # (n, n) dense
    degree: np.ndarray    # row sums
    total: float          # sum of all edge weights (each edge once)
    from_bus: np.ndarray  # underlying lines, for connectivity-aware methods
    to_bus: np.ndarray
    line_weights: np.ndarray

    @property
    def n(self) -> int:
        return int(self.weights.shape[0])


def flow_weighted_graph(net: Network, flow_magnitudes: np.ndarray) -> WeightedGraph:
    """Weight every line by its absolute pre-switching flow."""
    if flow_magnitudes.shape[0] != net.n_lines:
        raise ValueError("need one flow magnitude per line")
    w = np.abs(np.asarray(flow_magnitudes, float))
    n = net.n_buses
    mat = np.zeros((n, n))
    np.add.at(mat, (net.from_bus, net.to_bus), w)
    np.add.at(mat, (net.to_bus, net.from_bus), w)
    degree = mat.sum(axis=1)
    return WeightedGraph(
        weights=mat,
        degree=degree,
        total=float(degree.sum()) / 2.0,
        from_bus=net.from_bus.copy(),
        to_bus=net.to_bus.copy(),
        line_weights=w,
    )


def subgraph_weighted(wg: WeightedGraph, buses: np.ndarray) -> WeightedGraph:
    """Restriction of the weighted graph to a bus subset (for recursion)."""
    buses = np.asarray(buses, np.int64)
    pos = -np.ones(wg.n, np.int64)
    pos[buses] = np.arange(buses.shape[0])
    keep = (pos[wg.from_bus] >= 0) & (pos[wg.to_bus] >= 0)
    mat = wg.weights[np.ix_(buses, buses)]
    degree = mat.sum(axis=1)
    return WeightedGraph(
        weights=mat,
        degree=degree,
        total=float(degree.sum()) / 2.0,
        from_bus=pos[wg.from_bus[keep]],
        to_bus=pos[wg.to_bus[keep]],
        line_weights=wg.line_weights[keep].copy(),
    )


# ---------------------------------------------------------------------------
# Seeded k-means on the spectral embedding
# ---------------------------------------------------------------------------

def _kmeans_pp_init(points: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = points.shape[0]
    centers = np.empty((k, points.shape[1]))
    first = int(rng.integers(n))
    centers[0] = points[first]
    d2 = ((points - centers[0]) ** 2).sum(axis=1)
    for c in range(1, k):
        total = float(d2.sum())
        if total <= 0:
            centers[c] = points[int(rng.integers(n))]
            continue
        r = rng.random() * total
        idx = int(np.searchsorted(np.cumsum(d2), r))
        idx = min(idx, n - 1)
        centers[c] = points[idx]
        d2 = np.minimum(d2, ((points - centers[c]) ** 2).sum(axis=1))
    return centers


def kmeans(points: np.ndarray, k: int, seed: int,
           restarts: int = KMEANS_RESTARTS, iters: int = KMEANS_ITERS) -> np.ndarray:
    """Multi-restart Lloyd k-means; best inertia wins, ties go to the
    earliest restart. Returns labels."""
    rng = np.random.default_rng(seed)
    best_labels = None
    best_inertia = np.inf
    for _ in range(restarts):
        init = _kmeans_pp_init(points, k, rng)
        labels, _, inertia, _ = _accel.lloyd(points.copy(), init.copy(), iters, 1e-12)
        if inertia < best_inertia - 1e-15:
            best_inertia = inertia
            best_labels = labels.copy()
    return best_labels


# ---------------------------------------------------------------------------
# Spectral partitions
# ---------------------------------------------------------------------------

def spectral_partition(wg: WeightedGraph, k: int, mode: str = "ln", seed: int = 0) -> Partition:
    """k-way spectral clustering of the flow-weighted graph.

    mode "ln": k eigenvectors of the normalized Laplacian with smallest
    eigenvalues. mode "bn": k eigenvectors of the degree-normalized
    modularity matrix with largest eigenvalues. Rows of the embedding are
    normalized before seeded k-means.
    """
    n = wg.n
    if not 2 <= k <= n:
        raise ClusteringError(f"need 2 <= k <= {n}, got k={k}")
    if wg.total <= 0:
        raise ClusteringError("all edge weights are zero; nothing to cluster on")
    d = wg.degree.copy()
    floor = 1e-12 * max(float(d.max()), 1.0)
    d[d < floor] = floor
    inv_sqrt = 1.0 / np.sqrt(d)

    if mode == "ln":
        m = np.eye(n) - inv_sqrt[:, None] * wg.weights * inv_sqrt[None, :]
        vals, vecs = np.linalg.eigh(m)
        emb = vecs[:, :k]
    elif mode == "bn":
        b = wg.weights - np.outer(wg.degree, wg.degree) / (2.0 * wg.total)
        m = inv_sqrt[:, None] * b * inv_sqrt[None, :]
        vals, vecs = np.linalg.eigh(m)
        emb = vecs[:, ::-1][:, :k]
    else:
        raise ClusteringError(f"unknown spectral mode {mode!r}")

    norms = np.linalg.norm(emb, axis=1)
    norms[norms == 0] = 1.0
    emb = emb / norms[:, None]

    for attempt in range(5):
        labels = kmeans(emb, k, seed + 1_000_003 * attempt)
        if np.unique(labels).shape[0] == k:
            return compact_partition(labels)
    raise ClusteringError(f"k-means kept collapsing below k={k} clusters")


# ---------------------------------------------------------------------------
# Greedy modularity agglomeration
# ---------------------------------------------------------------------------

def modularity(wg: WeightedGraph, partition: Partition) -> float:
    """Weighted Newman modularity of a partition."""
    two_w = 2.0 * wg.total
    if two_w <= 0:
        return 0.0
    q = 0.0
    for c in range(partition.k):
        members = partition.labels == c
        internal = wg.weights[np.ix_(members, members)].sum()  # counts both directions
        deg = wg.degree[members].sum()
        q += internal / two_w - (deg / two_w) ** 2
    return float(q)


def fastgreedy_partition(wg: WeightedGraph, k: int) -> Partition:
    """Hierarchical agglomeration by best modularity gain, cut at k clusters.

    Only communities joined by at least one line may merge, so every
    community stays connected. Ties on the gain are broken toward the
    lexicographically smallest community pair, which makes the dendrogram
    (and therefore the cut) deterministic.
    """
    n = wg.n
    if k < 1 or k > n:
        raise ClusteringError(f"need 1 <= k <= {n}, got k={k}")
    two_w = 2.0 * wg.total
    if two_w <= 0:
        raise ClusteringError("all edge weights are zero; nothing to cluster on")

    import heapq

    labels = np.arange(n, dtype=np.int64)
    # e[i][j]: fraction of total weight between communities i and j;
    # pairs connected only by zero-weight lines are kept so they stay mergeable
    e: dict[int, dict[int, float]] = {i: {} for i in range(n)}
    for fb, tb, w in zip(wg.from_bus, wg.to_bus, wg.line_weights):
        i, j = int(fb), int(tb)
        if i == j:
            continue
        e[i][j] = e[i].get(j, 0.0) + w / two_w
        e[j][i] = e[i][j]
    a_frac = wg.degree / two_w
    alive = set(range(n))

    def gain(i: int, j: int) -> float:
        return 2.0 * (e[i][j] - a_frac[i] * a_frac[j])

    # lazy max-heap keyed by (-gain, i, j); stale entries are re-pushed with
    # their current gain when popped, so the pop order is exactly
    # "largest gain, then lexicographically smallest pair"
    heap: list[tuple[float, int, int]] = []
    for i in range(n):
        for j in e[i]:
            if i < j:
                heap.append((-gain(i, j), i, j))
    heapq.heapify(heap)

    while len(alive) > k:
        best = None
        while heap:
            negg, i, j = heapq.heappop(heap)
            if i not in alive or j not in alive or j not in e[i]:
                continue
            cur = -gain(i, j)
            if cur != negg:
                heapq.heappush(heap, (cur, i, j))
                continue
            best = (i, j)
            break
        if best is None:
            raise ClusteringError(
                f"cannot reach {k} communities: graph has more components"
            )
        i, j = best
        # merge j into i
        for nb, w in e[j].items():
            if nb == i:
                continue
            e[i][nb] = e[i].get(nb, 0.0) + w
            e[nb][i] = e[i][nb]
            del e[nb][j]
        e[i].pop(j, None)
        del e[j]
        a_frac[i] += a_frac[j]
        labels[labels == j] = i
        alive.remove(j)
        for nb in e[i]:
            a, bb = (i, nb) if i < nb else (nb, i)
            heapq.heappush(heap, (-gain(a, bb), a, bb))

    return compact_partition(labels)


# ---------------------------------------------------------------------------
# Connectivity repair
# ---------------------------------------------------------------------------

def ensure_connected_clusters(net: Network, partition: Partition,
                              weights: np.ndarray | None = None) -> Partition:
    """Make every cluster induce a connected subgraph.

    Each disconnected fragment (every component of a cluster except its
    largest) is handed to the neighboring cluster it is most strongly
    coupled to by total absolute flow. If a fragment has no neighbor outside
    its own cluster it becomes a new cluster, which is reported.
    """
    if weights is None:
        from .dcflow import solve_dc

        weights = np.abs(solve_dc(net).flows)
    weights = np.asarray(weights, float)
    labels = partition.labels.copy()
    n = net.n_buses
    indptr, adj_node, adj_edge = build_adjacency(n, net.from_bus, net.to_bus)

    # one fragment moves per sweep; component labels go stale as soon as a
    # label changes, so the sweep restarts after every reassignment
    for _ in range(2 * n):
        internal = labels[net.from_bus] == labels[net.to_bus]
        comp = _accel.component_labels(n, indptr, adj_node, adj_edge, internal)
        changed = False
        for c in sorted(set(int(x) for x in labels)):
            members = np.flatnonzero(labels == c)
            comps_here = {}
            for b in members:
                comps_here.setdefault(int(comp[b]), []).append(int(b))
            if len(comps_here) <= 1:
                continue
            fragments = sorted(comps_here.values(), key=lambda f: (-len(f), f[0]))
            frag = fragments[1]
            frag_set = set(frag)
            coupling: dict[int, float] = {}
            for b in frag:
                for i in range(indptr[b], indptr[b + 1]):
                    nb = int(adj_node[i])
                    if nb in frag_set:
                        continue
                    other = int(labels[nb])
                    if other == c:
                        continue
                    coupling[other] = coupling.get(other, 0.0) + float(
                        weights[adj_edge[i]]
                    )
            if coupling:
                target = max(sorted(coupling), key=lambda t: (coupling[t], -t))
            else:
                target = int(labels.max()) + 1
                log.warning(
                    "isolated fragment of cluster %d promoted to new cluster %d",
                    c, target,
                )
            for b in frag:
                labels[b] = target
            changed = True
            break
        if not changed:
            break
    else:
        raise ClusteringError("connectivity repair did not converge")

    return compact_partition(labels)
