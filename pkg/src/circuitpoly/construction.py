"""Decomposing rigidity circuits into resultant trees with K4 leaves.

The combinatorial resultant of two graphs with a common edge e is their
union with e removed.  Every circuit that is not itself a K4 splits as the
combinatorial resultant of two strictly smaller circuits: a 2-connected
circuit splits at a separation pair into a 2-sum, and a 3-connected one is
recovered from an inverse Henneberg II step on a degree-3 vertex.  Applying
this recursively yields a binary tree whose leaves are complete graphs on
four vertices; the polynomial side of the package eliminates one variable
per internal node, walking the tree bottom-up.

All choices (which vertex, which edge, which separation pair) are made in
ascending label order, so a given circuit always produces the same tree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Edge,
    Graph,
    edge,
    is_circuit,
    is_laman,
    separation_pairs,
    two_split,
    unique_circuit,
)


class ConstructionError(ValueError):
    """No decomposition of the requested kind exists for the input."""


def combinatorial_resultant(g1: Graph, g2: Graph, e) -> Graph:
    """Union of g1 and g2 with the common edge e removed."""
    e = edge(*e)
    if not (g1.has_edge(*e) and g2.has_edge(*e)):
        raise ValueError(f"edge {e} is not common to both graphs")
    return Graph.from_edges(
        (g1.edges | g2.edges) - {e}, vertices=g1.vertices | g2.vertices
    )


def common_graph(g1: Graph, g2: Graph) -> Graph:
    """Shared vertices and shared edges of two graphs."""
    return Graph(g1.vertices & g2.vertices, g1.edges & g2.edges)


def is_circuit_valid(g1: Graph, g2: Graph, e) -> bool:
    """Does the combinatorial resultant of two circuits give a circuit?

    A Laman common subgraph is necessary (it makes the edge count come out
    to 2n-2) but not sufficient, so the answer is decided by direct check.
    """
    e = edge(*e)
    for g in (g1, g2):
        if not is_circuit(g):
            raise ValueError("is_circuit_valid expects two circuits")
    if not (g1.has_edge(*e) and g2.has_edge(*e)):
        raise ValueError(f"edge {e} is not common to both circuits")
    return bool(is_circuit(combinatorial_resultant(g1, g2, e)))


def inverse_combinatorial_resultant(c: Graph) -> tuple[Graph, Graph, Edge]:
    """Write a 3-connected circuit as a combinatorial resultant of smaller ones.

    Scans degree-3 vertices a in ascending order; for each, tries the
    non-adjacent neighbor pairs e = (u, w) in lexicographic order.  Removing
    a and adding e must give a circuit A.  A second degree-3 vertex b, not
    adjacent to a, yields B as the unique circuit inside c - b + e.  The
    first combination with combinatorial_resultant(A, B, e) == c wins.

    Every 3-connected circuit on 5 or more vertices admits such a
    decomposition, so ConstructionError signals an input or implementation
    bug rather than an expected outcome.
    """
    if not is_circuit(c):
        raise ValueError("input is not a circuit")
    if c.n < 5:
        raise ValueError("need a circuit on at least 5 vertices")
    if separation_pairs(c):
        raise ValueError("circuit has a separation pair; use two_split instead")
    degree3 = [v for v in c.sorted_vertices() if c.degree(v) == 3]
    for a in degree3:
        nbrs = sorted(c.neighbors(a))
        for i, u in enumerate(nbrs):
            for w in nbrs[i + 1 :]:
                if c.has_edge(u, w):
                    continue
                e = edge(u, w)
                a_side = c.minus_vertex(a).plus_edge(e)
                if not is_circuit(a_side):
                    continue
                for b in degree3:
                    if b == a or c.has_edge(a, b):
                        continue
                    dependent = c.minus_vertex(b).plus_edge(e)
                    b_side = unique_circuit(dependent)
                    if not b_side.has_edge(*e):
                        continue
                    if combinatorial_resultant(a_side, b_side, e) != c:
                        continue
                    return a_side, b_side, e
    raise ConstructionError(
        "no inverse Henneberg II decomposition exists; "
        "this circuit is not a combinatorial resultant of two circuits"
    )


@dataclass(frozen=True)
class ResultantTreeNode:
    """One node of a resultant tree.

    Leaves carry a K4 and nothing else; internal nodes carry the eliminated
    edge and the two child circuits whose combinatorial resultant they are.
    """

    circuit: Graph
    elim_edge: Edge | None = None
    left: "ResultantTreeNode | None" = None
    right: "ResultantTreeNode | None" = None

    def __post_init__(self):
        have = (self.elim_edge is not None, self.left is not None, self.right is not None)
        if any(have) != all(have):
            raise ValueError("internal nodes need elim_edge and both children")

    @property
    def is_leaf(self) -> bool:
        return self.elim_edge is None

    @property
    def leaf_count(self) -> int:
        if self.is_leaf:
            return 1
        return self.left.leaf_count + self.right.leaf_count

    @property
    def depth(self) -> int:
        if self.is_leaf:
            return 0
        return 1 + max(self.left.depth, self.right.depth)

    def nodes(self):
        """All nodes in preorder."""
        yield self
        if not self.is_leaf:
            yield from self.left.nodes()
            yield from self.right.nodes()

    def to_json_obj(self) -> dict:
        return {
            "vertices": self.circuit.sorted_vertices(),
            "edges": [list(e) for e in self.circuit.sorted_edges()],
            "elim": list(self.elim_edge) if self.elim_edge else None,
            "left": self.left.to_json_obj() if self.left else None,
            "right": self.right.to_json_obj() if self.right else None,
        }

    @staticmethod
    def from_json_obj(obj) -> "ResultantTreeNode":
        g = Graph.from_edges(
            (tuple(e) for e in obj["edges"]), vertices=obj["vertices"]
        )
        if obj.get("elim") is None:
            return ResultantTreeNode(g)
        return ResultantTreeNode(
            g,
            edge(*obj["elim"]),
            ResultantTreeNode.from_json_obj(obj["left"]),
            ResultantTreeNode.from_json_obj(obj["right"]),
        )


def build_resultant_tree(c: Graph) -> ResultantTreeNode:
    """Recursive decomposition of a circuit down to K4 leaves.

    K4 is a leaf.  A circuit with a separation pair splits there into its
    2-sum parts; a 3-connected circuit decomposes by inverse Henneberg II.
    Raises ConstructionError for the rare circuit with neither option.
    """
    if not is_circuit(c):
        raise ValueError("input is not a circuit")
    if c.n == 4:
        return ResultantTreeNode(c)
    pairs = separation_pairs(c)
    if pairs:
        u, v = pairs[0]
        first, second = two_split(c, (u, v))
        return ResultantTreeNode(
            c, edge(u, v), build_resultant_tree(first), build_resultant_tree(second)
        )
    a_side, b_side, e = inverse_combinatorial_resultant(c)
    return ResultantTreeNode(
        c, e, build_resultant_tree(a_side), build_resultant_tree(b_side)
    )


def validate_tree(root: ResultantTreeNode) -> tuple[int, int]:
    """Check every structural invariant of a resultant tree.

    Verifies at each node: the graph is a circuit; leaves are K4s; each
    internal node equals the combinatorial resultant of its children over
    its elim edge; the children's common subgraph is Laman; children don't
    grow; and a node l levels below the root has at most n - l vertices.
    Returns (internal node count, leaf count).
    """
    n_root = root.circuit.n
    internal = leaves = 0
    stack = [(root, 0)]
    while stack:
        node, level = stack.pop()
        g = node.circuit
        if not is_circuit(g):
            raise ValueError(f"tree node on {g.sorted_vertices()} is not a circuit")
        if g.n > n_root - level:
            raise ValueError(
                f"node at level {level} has {g.n} vertices, more than {n_root - level}"
            )
        if node.is_leaf:
            if g.n != 4:
                raise ValueError("leaf is not a K4")
            leaves += 1
            continue
        internal += 1
        rebuilt = combinatorial_resultant(
            node.left.circuit, node.right.circuit, node.elim_edge
        )
        if rebuilt != g:
            raise ValueError(
                f"node on {g.sorted_vertices()} is not the combinatorial "
                f"resultant of its children over {node.elim_edge}"
            )
        shared = common_graph(node.left.circuit, node.right.circuit)
        if not is_laman(shared):
            raise ValueError(
                f"children of node on {g.sorted_vertices()} have a non-Laman overlap"
            )
        if max(node.left.circuit.n, node.right.circuit.n) > g.n:
            raise ValueError("child has more vertices than its parent")
        if min(node.left.circuit.n, node.right.circuit.n) >= g.n:
            raise ValueError("no child is strictly smaller than its parent")
        stack.append((node.left, level + 1))
        stack.append((node.right, level + 1))
    return internal, leaves
