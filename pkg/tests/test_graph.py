from __future__ import annotations

import pytest

from test_partition import example_partition
from regdecomp.blocks import BlockPartition
from regdecomp.regpart import (PartitionGraph, build_partition_graph, check_graph_properties,
                               finest_partition, partition_from_int_partition,
                               reconstruct_from_graph, search_regular_partitions, integer_partitions)
from regdecomp.rootsys import build_root_system


def test_example_graph():
    rs, p = example_partition()
    g = build_partition_graph(rs, p)
    assert g == PartitionGraph(3, ((3, 3),), ((1, 3, 1), (2, 3, 2)))
    rep = check_graph_properties(g)
    assert rep.all_pass and rep.star
    assert (rep.hub, rep.hub_sign) == (3, "-")


def test_example_reconstruction():
    rs, p = example_partition()
    q = reconstruct_from_graph(rs, build_partition_graph(rs, p))
    assert list(q.blocks) == list(p.blocks)


def test_row_finest_a2_graph():
    rs = build_root_system("A2")
    g = build_partition_graph(rs, finest_partition(rs))
    assert g.loops == () and g.edges == ((1, 2, 1), (1, 3, 2))


def test_single_block_graph_is_all_loops():
    rs = build_root_system("A3")
    g = build_partition_graph(rs, BlockPartition([rs.all]))
    assert g.m == 1 and g.loops == ((1, 1), (1, 2), (1, 3)) and g.edges == ()
    with pytest.raises(ValueError):
        reconstruct_from_graph(rs, g)


def test_disjoint_edges_fail_a4():
    rep = check_graph_properties(PartitionGraph(4, (), ((1, 2, 1), (3, 4, 2))))
    assert not rep.a4 and not rep.star


def test_loop_at_leaf_fails_a5():
    rep = check_graph_properties(PartitionGraph(3, ((2, 3),), ((1, 2, 1), (1, 3, 2))))
    assert not rep.a5
    rs = build_root_system("A3")
    with pytest.raises(ValueError):
        reconstruct_from_graph(rs, PartitionGraph(3, ((2, 3),), ((1, 2, 1), (1, 3, 2))))


def test_other_property_failures():
    two_loops = check_graph_properties(PartitionGraph(3, ((1, 1), (2, 2)), ((1, 3, 3),)))
    assert not two_loops.a1
    isolated = check_graph_properties(PartitionGraph(3, (), ((1, 2, 1), (1, 2, 2))))
    assert not isolated.a2
    mixed = check_graph_properties(PartitionGraph(3, (), ((1, 2, 1), (2, 3, 2))))
    assert not mixed.a3


def test_graph_validation():
    with pytest.raises(ValueError):
        PartitionGraph(3, (), ((1, 1, 1),))
    with pytest.raises(ValueError):
        PartitionGraph(3, (), ((1, 2, 1), (1, 3, 1)))
    with pytest.raises(ValueError):
        PartitionGraph(2, (), ((1, 3, 1),))


def test_reconstruct_rejections():
    rs = build_root_system("A2")
    with pytest.raises(ValueError):
        reconstruct_from_graph(rs, PartitionGraph(2, ((1, 2),), ((1, 2, 1),)))
    with pytest.raises(ValueError):
        reconstruct_from_graph(build_root_system("B2"), PartitionGraph(3, (), ((1, 2, 1), (1, 3, 2))))
    with pytest.raises(ValueError):
        reconstruct_from_graph(build_root_system("A3"), PartitionGraph(3, (), ((1, 2, 1), (1, 3, 2))))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_round_trip_all_labelled_partitions(n):
    rs = build_root_system(("A", n))
    parts = search_regular_partitions(rs, 3, modulo=()).classes
    for p in parts:
        g = build_partition_graph(rs, p)
        rep = check_graph_properties(g)
        assert rep.all_pass and rep.star
        q = reconstruct_from_graph(rs, g)
        assert list(q.blocks) == list(p.blocks)


def test_round_trip_int_partitions_both_orientations():
    rs = build_root_system("A5")
    for lam in integer_partitions(6, min_parts=3):
        for orientation in ("row", "column"):
            p = partition_from_int_partition(rs, lam, orientation)
            assert reconstruct_from_graph(rs, build_partition_graph(rs, p)) == p
