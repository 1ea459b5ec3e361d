"""Shared fixtures: synthetic networks and bundled case files."""

from pathlib import Path

import numpy as np
import pytest

from treepart import make_network

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


def build_net(edges, p=None, b=None, c=None, reference=0, n=None, bus_ids=None):
    """Small-network helper: edges as (from, to) pairs with 0-based buses."""
    edges = list(edges)
    m = len(edges)
    if n is None:
        n = max(max(e) for e in edges) + 1
    fb = [e[0] for e in edges]
    tb = [e[1] for e in edges]
    return make_network(
        bus_ids=bus_ids if bus_ids is not None else np.arange(1, n + 1),
        p=np.zeros(n) if p is None else np.asarray(p, float),
        from_bus=fb,
        to_bus=tb,
        susceptance=np.ones(m) if b is None else np.asarray(b, float),
        capacity=np.ones(m) if c is None else np.asarray(c, float),
        unlimited=np.zeros(m, bool),
        line_ids=np.arange(m),
        reference=reference,
    )


@pytest.fixture
def triangle():
    """3 buses, injections (1, -1, 0), unit susceptance and capacity."""
    return build_net([(0, 1), (0, 2), (2, 1)], p=[1.0, -1.0, 0.0], reference=2)


@pytest.fixture
def two_squares():
    """Two 4-cycles joined by a single edge (the only bridge)."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (3, 4)]
    return build_net(edges)


def random_connected_net(rng, n=None, extra=None, max_n=50, weights=True):
    """Random connected multigraph-backed network with balanced injections."""
    if n is None:
        n = int(rng.integers(4, max_n + 1))
    if extra is None:
        extra = int(rng.integers(0, 2 * n))
    fb, tb = [], []
    for v in range(1, n):
        fb.append(int(rng.integers(v)))
        tb.append(v)
    for _ in range(extra):
        a = int(rng.integers(n))
        bb = int(rng.integers(n))
        if a == bb:
            continue
        fb.append(a)
        tb.append(bb)
    m = len(fb)
    p = rng.normal(0.0, 1.0, n)
    p -= p.mean()
    b = rng.uniform(1.0, 20.0, m) if weights else np.ones(m)
    return make_network(
        bus_ids=np.arange(1, n + 1),
        p=p,
        from_bus=fb,
        to_bus=tb,
        susceptance=b,
        capacity=np.ones(m),
        unlimited=np.zeros(m, bool),
        line_ids=np.arange(m),
        reference=0,
    )
