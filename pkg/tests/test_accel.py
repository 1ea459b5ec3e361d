"""Kernel backends: jitted and fallback paths must agree."""

import os
import subprocess
import sys

import numpy as np

from treepart import _accel
from treepart.grid import build_adjacency

from conftest import random_connected_net


def csr(net):
    return build_adjacency(net.n_buses, net.from_bus, net.to_bus)


class TestParity:
    def test_bridge_mask_backends_agree(self):
        rng = np.random.default_rng(3)
        for _ in range(40):
            net = random_connected_net(rng, max_n=40)
            indptr, adj_node, adj_edge = csr(net)
            jit = _accel.bridge_mask(net.n_buses, net.n_lines, indptr, adj_node, adj_edge)
            py = _accel._bridge_mask_impl(net.n_buses, net.n_lines, indptr, adj_node, adj_edge)
            assert np.array_equal(np.asarray(jit), np.asarray(py))

    def test_component_labels_backends_agree(self):
        rng = np.random.default_rng(4)
        for _ in range(40):
            net = random_connected_net(rng, max_n=40)
            indptr, adj_node, adj_edge = csr(net)
            alive = rng.random(net.n_lines) < 0.6
            a = _accel.component_labels(net.n_buses, indptr, adj_node, adj_edge, alive)
            b = _accel._component_labels_numpy(net.n_buses, indptr, adj_node, adj_edge, alive)
            assert np.array_equal(np.asarray(a), np.asarray(b))

    def test_lloyd_backends_agree_on_separated_blobs(self):
        rng = np.random.default_rng(5)
        centers = np.array([[0.0, 0.0], [10.0, 0.0], [0.0, 10.0]])
        pts = np.vstack([c + 0.1 * rng.normal(size=(30, 2)) for c in centers])
        init = centers + 0.5
        la, ca, ia, _ = _accel._lloyd_impl(pts.copy(), init.copy(), 50, 1e-12)
        lb, cb, ib, _ = _accel._lloyd_numpy(pts.copy(), init.copy(), 50, 1e-12)
        assert np.array_equal(np.asarray(la), np.asarray(lb))
        assert ia != 0
        assert abs(ia - ib) <= 1e-12 * max(ia, ib)

    def test_lloyd_repairs_empty_clusters(self):
        pts = np.array([[0.0], [0.1], [10.0]])
        init = np.array([[0.0], [0.05], [0.07]])  # third center starts dead
        labels, _, _, _ = _accel._lloyd_impl(pts.copy(), init.copy(), 20, 1e-12)
        assert len(set(int(x) for x in labels)) == 3


class TestDispatch:
    def test_backend_name(self):
        assert _accel.backend() in ("numba", "numpy")

    def test_env_flag_disables_numba(self):
        code = (
            "import treepart._accel as a; "
            "print(a.backend(), a.NUMBA_ENABLED)"
        )
        env = dict(os.environ, TREEPART_NO_NUMBA="1")
        out = subprocess.run([sys.executable, "-c", code], env=env,
                             capture_output=True, text=True, check=True)
        assert out.stdout.split() == ["numpy", "False"]

    def test_results_identical_under_fallback(self, data_dir):
        # a full small run under the numpy backend must produce the same
        # bridges and decomposition (pure graph work is float-free)
        code = """
import json
from treepart import load_snapshot, to_network, find_bridges, bridge_block_decomposition
net = to_network(load_snapshot(r'%s'), 'dc')
bbd = bridge_block_decomposition(net)
print(json.dumps({'bridges': find_bridges(net), 'sizes': bbd.nontrivial_sizes()}))
""" % (data_dir / "snapshots" / "case73_dc.json")
        outs = []
        for flag in ("0", "1"):
            env = dict(os.environ, TREEPART_NO_NUMBA=flag)
            r = subprocess.run([sys.executable, "-c", code], env=env,
                               capture_output=True, text=True, check=True)
            outs.append(r.stdout.strip())
        assert outs[0] == outs[1]
        assert "71" in outs[0]
