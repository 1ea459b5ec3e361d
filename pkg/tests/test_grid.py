"""Graph core: bridges, blocks, partitions, spanning trees, switching."""

import numpy as np
import pytest

from treepart import (
    DisconnectedError,
    Partition,
    SwitchSet,
    apply_switch,
    bridge_block_decomposition,
    cross_edges,
    enumerate_spanning_trees,
    find_bridges,
    is_tree_partition,
    kirchhoff_tree_count,
)
from treepart.grid import components

from conftest import build_net, random_connected_net


def bridges_oracle(net):
    """Quadratic oracle: an edge is a bridge iff its removal disconnects."""
    out = []
    for lid in net.line_ids:
        try:
            apply_switch(net, SwitchSet([int(lid)]))
        except DisconnectedError:
            out.append(int(lid))
    return out


class TestBridges:
    def test_path_graph(self):
        net = build_net([(0, 1), (1, 2)])
        assert find_bridges(net) == [0, 1]

    def test_triangle(self, triangle):
        assert find_bridges(triangle) == []

    def test_two_squares_joined(self, two_squares):
        assert find_bridges(two_squares) == [8]

    def test_parallel_edges_are_never_bridges(self):
        net = build_net([(0, 1), (0, 1), (1, 2)])
        assert find_bridges(net) == [2]

    def test_matches_removal_oracle_on_random_graphs(self):
        rng = np.random.default_rng(101)
        for _ in range(100):
            net = random_connected_net(rng, max_n=40)
            assert net.n_lines <= 200
            assert find_bridges(net) == bridges_oracle(net)


class TestBridgeBlockDecomposition:
    def test_tree_gives_singletons(self):
        net = build_net([(0, 1), (1, 2), (1, 3), (3, 4)])
        bbd = bridge_block_decomposition(net)
        assert len(bbd.blocks) == 5
        assert len(bbd.bridges) == 4

    def test_cycle_is_single_block(self):
        net = build_net([(0, 1), (1, 2), (2, 3), (3, 0)])
        bbd = bridge_block_decomposition(net)
        assert bbd.sizes == [4]
        assert bbd.bridges == ()

    def test_blocks_partition_buses(self, two_squares):
        bbd = bridge_block_decomposition(two_squares)
        seen = sorted(b for blk in bbd.blocks for b in blk)
        assert seen == list(range(8))
        assert sorted(bbd.nontrivial_sizes(), reverse=True) == [4, 4]

    def test_finer_than_any_tree_partition(self):
        # merging adjacent blocks of the block tree yields tree partitions;
        # each block must stay inside a single cluster of any of them
        rng = np.random.default_rng(7)
        for _ in range(25):
            net = random_connected_net(rng, max_n=25)
            bbd = bridge_block_decomposition(net)
            nb = len(bbd.blocks)
            if nb == 1:
                continue
            # contract a random bridge repeatedly to merge adjacent blocks
            labels = np.arange(nb)
            for lid in bbd.bridges:
                if rng.random() < 0.5:
                    pos = net.line_pos(int(lid))
                    a = labels[bbd.block_of[net.from_bus[pos]]]
                    b = labels[bbd.block_of[net.to_bus[pos]]]
                    labels[labels == b] = a
            merged = {tag: i for i, tag in enumerate(dict.fromkeys(labels))}
            part = Partition(
                np.array([merged[labels[bbd.block_of[v]]] for v in range(net.n_buses)]),
                len(merged),
            )
            assert is_tree_partition(net, part)
            for blk in bbd.blocks:
                assert len({int(part.labels[v]) for v in blk}) == 1


class TestCrossEdges:
    def test_single_cluster_no_cross(self, triangle):
        red = cross_edges(triangle, Partition(np.zeros(3, int), 1))
        assert red.n_edges == 0

    def test_singletons_all_cross(self, triangle):
        red = cross_edges(triangle, Partition(np.arange(3), 3))
        assert red.n_edges == 3

    def test_multigraph_multiplicity_kept(self):
        net = build_net([(0, 1), (0, 1), (0, 1)])
        red = cross_edges(net, Partition(np.array([0, 1]), 2))
        assert red.n_edges == 3
        assert list(red.line_ids) == [0, 1, 2]


class TestIsTreePartition:
    def test_two_connected_clusters_one_edge(self):
        net = build_net([(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6), (6, 4)])
        part = Partition(np.array([0, 0, 0, 0, 1, 1, 1]), 2)
        assert is_tree_partition(net, part)

    def test_parallel_cross_edges_fail(self):
        net = build_net([(0, 1), (1, 2), (0, 2), (2, 3), (2, 3), (3, 4), (4, 5), (5, 3)])
        part = Partition(np.array([0, 0, 0, 1, 1, 1]), 2)
        assert not is_tree_partition(net, part)

    def test_disconnected_cluster_fails(self):
        net = build_net([(0, 1), (1, 2), (2, 3), (3, 0)])
        part = Partition(np.array([0, 1, 0, 1]), 2)
        assert not is_tree_partition(net, part)

    def test_bridge_blocks_form_tree_partition(self, two_squares):
        bbd = bridge_block_decomposition(two_squares)
        part = Partition(bbd.block_of, len(bbd.blocks))
        assert is_tree_partition(two_squares, part)


class TestSpanningTrees:
    def test_three_parallel_edges(self):
        net = build_net([(0, 1), (0, 1), (0, 1)])
        red = cross_edges(net, Partition(np.array([0, 1]), 2))
        trees = list(enumerate_spanning_trees(red))
        assert trees == [frozenset({0}), frozenset({1}), frozenset({2})]

    def test_triangle(self, triangle):
        red = cross_edges(triangle, Partition(np.arange(3), 3))
        assert len(list(enumerate_spanning_trees(red))) == 3

    def test_k4_has_16_trees(self):
        edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        net = build_net(edges)
        red = cross_edges(net, Partition(np.arange(4), 4))
        trees = list(enumerate_spanning_trees(red))
        assert len(trees) == 16
        assert kirchhoff_tree_count(red) == 16
        assert len(set(trees)) == 16

    def test_count_matches_kirchhoff_on_random_multigraphs(self):
        rng = np.random.default_rng(11)
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
            assert len(trees) == kirchhoff_tree_count(red)
            assert len(set(trees)) == len(trees)

    def test_disconnected_reduced_graph_rejected(self):
        net = build_net([(0, 1), (2, 3), (1, 2)])
        part = Partition(np.array([0, 0, 1, 1]), 2)
        red = cross_edges(net, part)
        pruned = type(red)(k=3, endpoints=red.endpoints, line_ids=red.line_ids)
        with pytest.raises(DisconnectedError):
            list(enumerate_spanning_trees(pruned))


class TestApplySwitch:
    def test_empty_switch_is_identity(self, triangle):
        assert apply_switch(triangle, SwitchSet()) is triangle

    def test_remove_triangle_edge_leaves_path(self, triangle):
        post = apply_switch(triangle, SwitchSet([2]))
        assert post.n_lines == 2
        assert find_bridges(post) == [0, 1]
        assert list(post.line_ids) == [0, 1]

    def test_removing_bridge_raises(self, two_squares):
        with pytest.raises(DisconnectedError):
            apply_switch(two_squares, SwitchSet([8]))

    def test_injections_untouched(self, triangle):
        post = apply_switch(triangle, SwitchSet([1]))
        assert np.array_equal(post.p, triangle.p)

    def test_components_reported(self, two_squares):
        assert len(components(two_squares, SwitchSet())) == 1
