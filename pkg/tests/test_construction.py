"""Combinatorial resultants and the decomposition into K4-leaf trees."""

from __future__ import annotations

import pytest

from circuitpoly.catalog import NAMED_CIRCUITS
from circuitpoly.construction import (
    ConstructionError,
    ResultantTreeNode,
    build_resultant_tree,
    combinatorial_resultant,
    common_graph,
    inverse_combinatorial_resultant,
    is_circuit_valid,
    validate_tree,
)
from circuitpoly.graphs import Graph, is_circuit, is_laman, unique_circuit


def k4(*vs):
    return Graph.complete(vs)


def wheel(rim, hub):
    edges = [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))]
    edges += [(hub, v) for v in rim]
    return Graph.from_edges(edges)


class TestCombinatorialResultant:
    def test_two_k4s_make_the_double_banana(self):
        got = combinatorial_resultant(k4(1, 2, 3, 4), k4(1, 4, 5, 6), (1, 4))
        assert got == NAMED_CIRCUITS["double-banana"]

    def test_wheel_and_k4_make_the_5_wheel(self):
        w4 = wheel((1, 2, 4, 5), 6)
        got = combinatorial_resultant(w4, k4(2, 3, 4, 6), (2, 4))
        assert got == NAMED_CIRCUITS["wheel5"]

    def test_elim_edge_is_dropped_and_vertices_united(self):
        got = combinatorial_resultant(k4(1, 2, 3, 4), k4(3, 4, 5, 6), (3, 4))
        assert got.vertices == frozenset(range(1, 7))
        assert not got.has_edge(3, 4)
        assert got.m == 6 + 6 - 2

    def test_rejects_non_common_edge(self):
        with pytest.raises(ValueError):
            combinatorial_resultant(k4(1, 2, 3, 4), k4(3, 4, 5, 6), (1, 2))
        with pytest.raises(ValueError):
            combinatorial_resultant(k4(1, 2, 3, 4), k4(3, 4, 5, 6), (1, 5))


class TestCommonGraph:
    def test_shared_parts(self):
        shared = common_graph(k4(1, 2, 3, 4), k4(2, 3, 4, 5))
        assert shared.vertices == frozenset({2, 3, 4})
        assert shared.edges == k4(2, 3, 4).edges if False else shared.edges == Graph.complete([2, 3, 4]).edges

    def test_disjoint_graphs(self):
        shared = common_graph(k4(1, 2, 3, 4), k4(5, 6, 7, 8))
        assert shared.n == 0
        assert shared.m == 0


class TestIsCircuitValid:
    def test_wheel_pair_is_valid(self):
        w4 = wheel((1, 2, 4, 5), 6)
        assert is_circuit_valid(w4, k4(2, 3, 4, 6), (2, 4))

    def test_laman_overlap_is_not_sufficient(self):
        # the overlap here is Laman, so the edge count works out, but the
        # result contains a smaller circuit and is only Laman-plus-one
        w4 = wheel((1, 2, 3, 4), 5)
        other = k4(1, 2, 3, 5)
        assert is_laman(common_graph(w4, other))
        assert not is_circuit_valid(w4, other, (1, 2))
        merged = combinatorial_resultant(w4, other, (1, 2))
        assert merged.m == 2 * merged.n - 2
        assert unique_circuit(merged) == k4(1, 3, 4, 5)

    def test_poor_overlap_breaks_the_edge_count(self):
        w5 = NAMED_CIRCUITS["wheel5"]
        other = k4(1, 2, 4, 7)
        shared = common_graph(w5, other)
        assert not is_laman(shared)
        assert not is_circuit_valid(w5, other, (1, 2))
        merged = combinatorial_resultant(w5, other, (1, 2))
        assert merged.m != 2 * merged.n - 2

    def test_rejects_non_circuit_arguments(self):
        laman = Graph.from_edges([(1, 2), (1, 3), (2, 3), (1, 4), (2, 4)])
        with pytest.raises(ValueError):
            is_circuit_valid(laman, k4(1, 2, 3, 4), (1, 2))


class TestInverseCombinatorialResultant:
    def test_wheel4_decomposition(self):
        a, b, e = inverse_combinatorial_resultant(NAMED_CIRCUITS["wheel4"])
        assert e == (2, 4)
        assert a == k4(2, 3, 4, 5)
        assert b == k4(1, 2, 4, 5)

    def test_wheel5_decomposition(self):
        a, b, e = inverse_combinatorial_resultant(NAMED_CIRCUITS["wheel5"])
        assert e == (2, 5)
        assert a == wheel((2, 3, 4, 5), 6)
        assert b == k4(1, 2, 5, 6)

    def test_desargues_decomposition(self):
        a, b, e = inverse_combinatorial_resultant(NAMED_CIRCUITS["desargues-plus-one"])
        assert e == (1, 3)
        assert a == wheel((3, 4, 5, 6), 1)
        assert b == k4(1, 2, 3, 6)

    def test_identity_holds_on_3_connected_catalog_circuits(self):
        for name in ("wheel4", "wheel5", "desargues-plus-one"):
            c = NAMED_CIRCUITS[name]
            a, b, e = inverse_combinatorial_resultant(c)
            assert is_circuit(a) and is_circuit(b)
            assert combinatorial_resultant(a, b, e) == c
            assert a.n == c.n - 1
            assert b.n <= c.n - 1

    def test_k33_plus_one_has_no_decomposition(self):
        with pytest.raises(ConstructionError):
            inverse_combinatorial_resultant(NAMED_CIRCUITS["k33-plus-one"])

    def test_rejects_2_connected_and_small_inputs(self):
        with pytest.raises(ValueError):
            inverse_combinatorial_resultant(NAMED_CIRCUITS["double-banana"])
        with pytest.raises(ValueError):
            inverse_combinatorial_resultant(k4(1, 2, 3, 4))
        with pytest.raises(ValueError):
            inverse_combinatorial_resultant(Graph.from_edges([(1, 2), (2, 3)]))


class TestTreeNode:
    def test_leaf_properties(self):
        leaf = ResultantTreeNode(k4(1, 2, 3, 4))
        assert leaf.is_leaf
        assert leaf.leaf_count == 1
        assert leaf.depth == 0
        assert list(leaf.nodes()) == [leaf]

    def test_partial_internal_node_is_rejected(self):
        with pytest.raises(ValueError):
            ResultantTreeNode(k4(1, 2, 3, 4), elim_edge=(1, 2))

    def test_json_roundtrip(self):
        tree = build_resultant_tree(NAMED_CIRCUITS["wheel5"])
        obj = tree.to_json_obj()
        assert ResultantTreeNode.from_json_obj(obj) == tree
        assert obj["elim"] == [2, 5]
        assert obj["left"]["left"]["elim"] is None


class TestBuildTree:
    def test_k4_is_a_single_leaf(self):
        tree = build_resultant_tree(k4(1, 2, 3, 4))
        assert tree.is_leaf

    def test_wheel4_tree(self):
        tree = build_resultant_tree(NAMED_CIRCUITS["wheel4"])
        assert tree.elim_edge == (2, 4)
        assert tree.left.circuit == k4(2, 3, 4, 5)
        assert tree.right.circuit == k4(1, 2, 4, 5)
        assert tree.left.is_leaf and tree.right.is_leaf

    def test_double_banana_tree_is_a_2_sum(self):
        tree = build_resultant_tree(NAMED_CIRCUITS["double-banana"])
        assert tree.elim_edge == (1, 4)
        assert tree.left.circuit == k4(1, 2, 3, 4)
        assert tree.right.circuit == k4(1, 4, 5, 6)
        assert tree.leaf_count == 2
        assert tree.depth == 1

    def test_wheel5_tree(self):
        tree = build_resultant_tree(NAMED_CIRCUITS["wheel5"])
        assert tree.depth == 2
        assert tree.leaf_count == 3
        assert tree.elim_edge == (2, 5)
        assert tree.left.circuit == wheel((2, 3, 4, 5), 6)
        assert tree.left.elim_edge == (3, 5)
        assert tree.left.left.circuit == k4(3, 4, 5, 6)
        assert tree.left.right.circuit == k4(2, 3, 5, 6)
        assert tree.right.circuit == k4(1, 2, 5, 6)

    def test_desargues_tree(self):
        tree = build_resultant_tree(NAMED_CIRCUITS["desargues-plus-one"])
        assert tree.elim_edge == (1, 3)
        assert tree.left.circuit == wheel((3, 4, 5, 6), 1)
        assert tree.left.elim_edge == (4, 6)
        assert tree.left.left.circuit == k4(1, 4, 5, 6)
        assert tree.left.right.circuit == k4(1, 3, 4, 6)
        assert tree.right.circuit == k4(1, 2, 3, 6)

    def test_seven_vertex_trees_split_then_recurse(self):
        tree16 = build_resultant_tree(NAMED_CIRCUITS["banana-k4-16"])
        assert tree16.elim_edge == (1, 4)
        assert tree16.left.circuit == k4(1, 2, 3, 4)
        assert tree16.right.circuit == wheel((1, 4, 6, 7), 5)
        assert tree16.right.elim_edge == (4, 7)
        assert tree16.right.left.circuit == k4(4, 5, 6, 7)
        assert tree16.right.right.circuit == k4(1, 4, 5, 7)

        tree56 = build_resultant_tree(NAMED_CIRCUITS["banana-k4-56"])
        assert tree56.elim_edge == (1, 4)
        assert tree56.left.circuit == k4(1, 2, 3, 4)
        assert tree56.right.circuit == wheel((5, 1, 6, 7), 4)
        assert tree56.right.elim_edge == (5, 6)
        assert tree56.right.left.circuit == k4(4, 5, 6, 7)
        assert tree56.right.right.circuit == k4(1, 4, 5, 6)

    def test_k33_plus_one_is_rejected(self):
        with pytest.raises(ConstructionError):
            build_resultant_tree(NAMED_CIRCUITS["k33-plus-one"])

    def test_non_circuit_is_rejected(self):
        with pytest.raises(ValueError):
            build_resultant_tree(Graph.from_edges([(1, 2), (1, 3), (2, 3)]))


class TestValidateTree:
    def test_all_computable_catalog_trees_validate(self):
        for name, c in NAMED_CIRCUITS.items():
            if name == "k33-plus-one" or c.n == 4:
                continue
            tree = build_resultant_tree(c)
            internal, leaves = validate_tree(tree)
            assert leaves == internal + 1
            assert leaves == tree.leaf_count

    def test_level_bound(self):
        for name in ("wheel5", "banana-k4-16", "banana-k4-56"):
            tree = build_resultant_tree(NAMED_CIRCUITS[name])
            n = tree.circuit.n
            stack = [(tree, 0)]
            while stack:
                node, level = stack.pop()
                assert node.circuit.n <= n - level
                if not node.is_leaf:
                    stack.append((node.left, level + 1))
                    stack.append((node.right, level + 1))

    def test_detects_broken_identity(self):
        bad = ResultantTreeNode(
            NAMED_CIRCUITS["double-banana"],
            (1, 4),
            ResultantTreeNode(k4(1, 2, 3, 4)),
            ResultantTreeNode(k4(1, 4, 5, 7)),
        )
        with pytest.raises(ValueError):
            validate_tree(bad)
