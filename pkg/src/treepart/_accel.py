"""Hot graph/clustering kernels with numba-jitted and numpy fallback paths.

The jitted path is used whenever numba imports cleanly; set the environment
variable ``TREEPART_NO_NUMBA=1`` before import to force the fallback path
(useful for debugging and for the kernel benchmark). Both paths implement
the same contracts; the dispatcher picks one at import time.
"""

from __future__ import annotations

import os

import numpy as np

_INT = np.int64


def _numba_disabled() -> bool:
    return os.environ.get("TREEPART_NO_NUMBA", "").strip().lower() in ("1", "true", "yes")


# ---------------------------------------------------------------------------
# Kernel bodies (nopython-compatible; also runnable in plain CPython)
# ---------------------------------------------------------------------------

def _bridge_mask_impl(n_nodes, n_edges, indptr, adj_node, adj_edge):
    """Tarjan low-link bridge detection on an undirected multigraph in CSR form.

    Each edge appears once per endpoint in the adjacency arrays, keyed by its
    position id. Parallel edges carry distinct ids, so only the single edge
    used to enter a vertex is skipped and a parallel copy still lowers the
    low-link, which keeps parallel pairs off the bridge list.
    """
    disc = np.full(n_nodes, -1, _INT)
    low = np.zeros(n_nodes, _INT)
    enter_edge = np.full(n_nodes, -1, _INT)
    stack_node = np.zeros(n_nodes + 1, _INT)
    stack_ptr = np.zeros(n_nodes + 1, _INT)
    out = np.zeros(n_edges, np.bool_)
    timer = 0
    for root in range(n_nodes):
        if disc[root] >= 0:
            continue
        top = 0
        stack_node[0] = root
        stack_ptr[0] = indptr[root]
        disc[root] = timer
        low[root] = timer
        timer += 1
        while top >= 0:
            v = stack_node[top]
            i = stack_ptr[top]
            if i < indptr[v + 1]:
                stack_ptr[top] = i + 1
                w = adj_node[i]
                e = adj_edge[i]
                if e == enter_edge[v]:
                    continue
                if disc[w] < 0:
                    disc[w] = timer
                    low[w] = timer
                    timer += 1
                    enter_edge[w] = e
                    top += 1
                    stack_node[top] = w
                    stack_ptr[top] = indptr[w]
                elif disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                top -= 1
                if top >= 0:
                    u = stack_node[top]
                    if low[v] < low[u]:
                        low[u] = low[v]
                    if low[v] > disc[u]:
                        out[enter_edge[v]] = True
    return out


def _component_labels_impl(n_nodes, indptr, adj_node, adj_edge, edge_alive):
    """Label connected components (0, 1, ... in order of smallest member)."""
    labels = np.full(n_nodes, -1, _INT)
    queue = np.zeros(n_nodes, _INT)
    comp = 0
    for start in range(n_nodes):
        if labels[start] >= 0:
            continue
        labels[start] = comp
        queue[0] = start
        head = 0
        tail = 1
        while head < tail:
            v = queue[head]
            head += 1
            for i in range(indptr[v], indptr[v + 1]):
                if not edge_alive[adj_edge[i]]:
                    continue
                w = adj_node[i]
                if labels[w] < 0:
                    labels[w] = comp
                    queue[tail] = w
                    tail += 1
        comp += 1
    return labels


def _spanning_trees_impl(k, eu, ev, out):
    """Enumerate every spanning tree of a connected multigraph on k vertices.

    Edges are given by endpoint arrays in enumeration order; each tree is a
    row of edge positions in ``out``. Include-first depth-first search with a
    union-by-size forest and explicit undo, so the edge order (and therefore
    the tree order) matches the streaming enumerator. Returns the number of
    trees written, or -1 if ``out`` is too small.
    """
    m = eu.shape[0]
    parent = np.arange(k)
    size = np.ones(k, _INT)
    fpos = np.zeros(m + 2, _INT)
    fphase = np.zeros(m + 2, _INT)
    fundo = np.full(m + 2, -1, _INT)
    chosen = np.zeros(k + 1, _INT)
    tmp = np.zeros(k, _INT)
    n_chosen = 0
    ntrees = 0
    cap = out.shape[0]
    top = 0

    while top >= 0:
        pos = fpos[top]
        phase = fphase[top]
        if phase == 0:
            if n_chosen == k - 1:
                if ntrees == cap:
                    return -1
                for i in range(k - 1):
                    out[ntrees, i] = chosen[i]
                ntrees += 1
                top -= 1
                continue
            if pos >= m or m - pos < k - 1 - n_chosen:
                top -= 1
                continue
            u = eu[pos]
            while parent[u] != u:
                u = parent[u]
            v = ev[pos]
            while parent[v] != v:
                v = parent[v]
            if u != v:
                if size[u] < size[v]:
                    u, v = v, u
                parent[v] = u
                size[u] += size[v]
                fundo[top] = v
                chosen[n_chosen] = pos
                n_chosen += 1
                fphase[top] = 1
                top += 1
                fpos[top] = pos + 1
                fphase[top] = 0
                fundo[top] = -1
            else:
                fundo[top] = -1
                fphase[top] = 1
            continue
        if phase == 1:
            v = fundo[top]
            if v >= 0:
                p = parent[v]
                size[p] -= size[v]
                parent[v] = v
                fundo[top] = -1
                n_chosen -= 1
            # exclude this edge only if the rest still spans the graph
            nc = 0
            for i in range(k):
                tmp[i] = parent[i]
                if parent[i] == i:
                    nc += 1
            connected = nc == 1
            if not connected:
                for e in range(pos + 1, m):
                    a = tmp[eu[e]]
                    while tmp[a] != a:
                        a = tmp[a]
                    b = tmp[ev[e]]
                    while tmp[b] != b:
                        b = tmp[b]
                    tmp[eu[e]] = a
                    tmp[ev[e]] = b
                    if a != b:
                        tmp[a] = b
                        nc -= 1
                        if nc == 1:
                            connected = True
                            break
            if connected:
                fphase[top] = 2
                top += 1
                fpos[top] = pos + 1
                fphase[top] = 0
                fundo[top] = -1
            else:
                top -= 1
            continue
        top -= 1
    return ntrees


def _lloyd_impl(points, centers, max_iter, tol):
    """Lloyd iterations for k-means. Returns (labels, centers, inertia, iters).

    Empty clusters are repaired deterministically by re-seeding them on the
    point currently farthest from its assigned center.
    """
    n, d = points.shape
    k = centers.shape[0]
    labels = np.zeros(n, _INT)
    dist = np.zeros(n, np.float64)
    counts = np.zeros(k, _INT)
    new_centers = np.zeros((k, d), np.float64)
    inertia = 0.0
    iters = 0
    for _ in range(max_iter):
        iters += 1
        inertia = 0.0
        for i in range(n):
            best = 0
            best_d = np.inf
            for c in range(k):
                acc = 0.0
                for j in range(d):
                    diff = points[i, j] - centers[c, j]
                    acc += diff * diff
                if acc < best_d:
                    best_d = acc
                    best = c
            labels[i] = best
            dist[i] = best_d
            inertia += best_d
        for c in range(k):
            counts[c] = 0
            for j in range(d):
                new_centers[c, j] = 0.0
        for i in range(n):
            c = labels[i]
            counts[c] += 1
            for j in range(d):
                new_centers[c, j] += points[i, j]
        for c in range(k):
            if counts[c] == 0:
                far = 0
                far_d = -1.0
                for i in range(n):
                    if dist[i] > far_d:
                        far_d = dist[i]
                        far = i
                for j in range(d):
                    new_centers[c, j] = points[far, j]
                labels[far] = c
                dist[far] = 0.0
            else:
                for j in range(d):
                    new_centers[c, j] /= counts[c]
        shift = 0.0
        for c in range(k):
            for j in range(d):
                diff = new_centers[c, j] - centers[c, j]
                shift += diff * diff
                centers[c, j] = new_centers[c, j]
        if shift <= tol:
            break
    return labels, centers, inertia, iters


# ---------------------------------------------------------------------------
# Fallback variants (vectorized where numpy allows it)
# ---------------------------------------------------------------------------

def _component_labels_numpy(n_nodes, indptr, adj_node, adj_edge, edge_alive):
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import connected_components

    rows = []
    cols = []
    for v in range(n_nodes):
        for i in range(indptr[v], indptr[v + 1]):
            if edge_alive[adj_edge[i]]:
                rows.append(v)
                cols.append(adj_node[i])
    mat = csr_matrix(
        (np.ones(len(rows), np.int8), (np.array(rows, _INT), np.array(cols, _INT))),
        shape=(n_nodes, n_nodes),
    )
    _, raw = connected_components(mat, directed=False)
    # normalize label order to "first seen" so both backends agree
    remap = np.full(raw.max() + 1 if n_nodes else 0, -1, _INT)
    nxt = 0
    out = np.zeros(n_nodes, _INT)
    for v in range(n_nodes):
        r = raw[v]
        if remap[r] < 0:
            remap[r] = nxt
            nxt += 1
        out[v] = remap[r]
    return out


def _lloyd_numpy(points, centers, max_iter, tol):
    n = points.shape[0]
    k = centers.shape[0]
    labels = np.zeros(n, _INT)
    inertia = 0.0
    iters = 0
    for _ in range(max_iter):
        iters += 1
        d2 = ((points[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
        labels = d2.argmin(axis=1).astype(_INT)
        dist = d2[np.arange(n), labels]
        inertia = float(dist.sum())
        new_centers = np.zeros_like(centers)
        counts = np.bincount(labels, minlength=k)
        np.add.at(new_centers, labels, points)
        for c in range(k):
            if counts[c] == 0:
                far = int(dist.argmax())
                new_centers[c] = points[far]
                labels[far] = c
                dist[far] = 0.0
            else:
                new_centers[c] /= counts[c]
        shift = float(((new_centers - centers) ** 2).sum())
        centers = new_centers
        if shift <= tol:
            break
    return labels, centers, inertia, iters


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------

NUMBA_ENABLED = False

if not _numba_disabled():
    try:
        from numba import njit

        _bridge_mask_jit = njit(cache=True)(_bridge_mask_impl)
        _component_labels_jit = njit(cache=True)(_component_labels_impl)
        _lloyd_jit = njit(cache=True)(_lloyd_impl)
        _spanning_trees_jit = njit(cache=True)(_spanning_trees_impl)
        NUMBA_ENABLED = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        NUMBA_ENABLED = False

if NUMBA_ENABLED:
    bridge_mask = _bridge_mask_jit
    component_labels = _component_labels_jit
    lloyd = _lloyd_jit
    spanning_trees_table = _spanning_trees_jit
else:
    bridge_mask = _bridge_mask_impl
    component_labels = _component_labels_numpy
    lloyd = _lloyd_numpy
    spanning_trees_table = _spanning_trees_impl


def backend() -> str:
    """Name of the active kernel backend ("numba" or "numpy")."""
    return "numba" if NUMBA_ENABLED else "numpy"
