"""Graphs over labeled vertices and the (2,3)-sparsity matroid.

A Graph is an immutable value: a frozenset of positive integer vertex labels
plus a frozenset of canonical (i, j) edges with i < j.  Labels are preserved
by every operation, so a subgraph of a graph on 1..n keeps its original
vertex names.  All functions here are pure.

The sparsity machinery implements the (2,3)-pebble game.  A graph is
(2,3)-sparse when every vertex subset V' with at least two vertices spans at
most 2|V'| - 3 edges; a Laman graph is a sparse graph with exactly 2n - 3
edges; a rigidity circuit is a graph with 2n - 2 edges, all of whose
single-edge deletions are Laman.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

Edge = tuple[int, int]


def edge(i: int, j: int) -> Edge:
    """Canonical edge: endpoints sorted increasingly, self-loops rejected."""
    if i == j:
        raise ValueError(f"self-loop at vertex {i}")
    if i < 1 or j < 1:
        raise ValueError(f"vertex labels must be positive, got {i}, {j}")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """Immutable graph over explicitly labeled vertices."""

    vertices: frozenset[int]
    edges: frozenset[Edge]

    def __post_init__(self):
        for v in self.vertices:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"bad vertex label {v!r}")
        for e in self.edges:
            i, j = e
            if not i < j:
                raise ValueError(f"edge {e} is not in canonical (i, j) order")
            if i not in self.vertices or j not in self.vertices:
                raise ValueError(f"edge {e} has an endpoint outside the vertex set")

    @staticmethod
    def from_edges(edges, vertices=()) -> "Graph":
        """Build from an iterable of vertex pairs.

        The vertex set is the span of the edges plus whatever extra labels are
        passed in `vertices` (useful for graphs with isolated vertices).
        """
        es = frozenset(edge(i, j) for i, j in edges)
        vs = set(vertices)
        for i, j in es:
            vs.add(i)
            vs.add(j)
        return Graph(frozenset(vs), es)

    @staticmethod
    def complete(labels) -> "Graph":
        vs = sorted(set(labels))
        return Graph.from_edges(itertools.combinations(vs, 2), vs)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, i, j) -> bool:
        return edge(i, j) in self.edges

    def neighbors(self, v) -> set[int]:
        out = set()
        for i, j in self.edges:
            if i == v:
                out.add(j)
            elif j == v:
                out.add(i)
        return out

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def spans_all_vertices(self) -> bool:
        """True when no vertex is isolated."""
        seen = set()
        for i, j in self.edges:
            seen.add(i)
            seen.add(j)
        return seen == set(self.vertices)

    def minus_edge(self, e) -> "Graph":
        e = edge(*e)
        if e not in self.edges:
            raise ValueError(f"edge {e} not in graph")
        return Graph(self.vertices, self.edges - {e})

    def plus_edge(self, e) -> "Graph":
        e = edge(*e)
        if e in self.edges:
            raise ValueError(f"edge {e} already in graph")
        return Graph(self.vertices, self.edges | {e})

    def minus_vertex(self, v) -> "Graph":
        if v not in self.vertices:
            raise ValueError(f"vertex {v} not in graph")
        keep = self.vertices - {v}
        return Graph(keep, frozenset(e for e in self.edges if v not in e))

    def induced(self, subset) -> "Graph":
        keep = frozenset(subset)
        if not keep <= self.vertices:
            raise ValueError("induced subset contains unknown vertices")
        return Graph(keep, frozenset((i, j) for i, j in self.edges if i in keep and j in keep))

    def restricted_to_span(self) -> "Graph":
        """Drop isolated vertices, keeping only endpoints of edges."""
        seen = set()
        for i, j in self.edges:
            seen.add(i)
            seen.add(j)
        return Graph(frozenset(seen), self.edges)


@dataclass(frozen=True)
class SparsityVerdict:
    """Outcome of the (2,3)-sparsity decision.

    When `independent` is false, `witness` is a vertex set spanning more than
    2|V'| - 3 edges.
    """

    independent: bool
    witness: frozenset[int] | None = None

    def __bool__(self):
        return self.independent


def _pull_pebble(out, pebbles, src, banned):
    """Try to move one free pebble to `src` along reversed search paths.

    Depth-first search over the orientation `out`; `banned` may be traversed
    but never donates a pebble.  Returns True when a pebble arrived.
    """
    parent = {src: None}
    stack = [src]
    while stack:
        v = stack.pop()
        if v != src and v != banned and pebbles[v] > 0:
            # walk back to src, reversing each edge on the path
            pebbles[v] -= 1
            while parent[v] is not None:
                p = parent[v]
                out[p].remove(v)
                out[v].add(p)
                v = p
            pebbles[src] += 1
            return True
        for w in sorted(out[v], reverse=True):
            if w not in parent:
                parent[w] = v
                stack.append(w)
    return False


def _reach(out, seeds):
    seen = set(seeds)
    stack = list(seeds)
    while stack:
        v = stack.pop()
        for w in out[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def is_sparse(g: Graph) -> SparsityVerdict:
    """Decide (2,3)-sparsity of the edge set by the pebble game.

    Every vertex starts with two pebbles; an edge is accepted only once four
    pebbles sit on its endpoints, after which one pebble pays for the edge.
    If some edge cannot gather four pebbles, the set of vertices reachable
    from its endpoints in the pebble orientation spans more than 2|V'| - 3
    edges and is returned as the witness.
    """
    pebbles = {v: 2 for v in g.vertices}
    out = {v: set() for v in g.vertices}
    for u, v in g.sorted_edges():
        while pebbles[u] < 2 and _pull_pebble(out, pebbles, u, v):
            pass
        while pebbles[v] < 2 and _pull_pebble(out, pebbles, v, u):
            pass
        if pebbles[u] + pebbles[v] < 4:
            return SparsityVerdict(False, _reach(out, (u, v)))
        pebbles[u] -= 1
        out[u].add(v)
    return SparsityVerdict(True)


def is_laman(g: Graph) -> bool:
    """Sparse with exactly 2n - 3 edges (minimally rigid in the plane)."""
    return g.n >= 2 and g.m == 2 * g.n - 3 and is_sparse(g).independent


def is_circuit(g: Graph) -> bool:
    """2n - 2 edges spanning every vertex, with all edge-deletions Laman."""
    if g.n < 4 or g.m != 2 * g.n - 2 or not g.spans_all_vertices():
        return False
    return all(is_laman(g.minus_edge(e)) for e in g.sorted_edges())


def unique_circuit(g: Graph) -> Graph:
    """The circuit inside a dependent graph with 2n - 2 edges.

    The input must be a Laman graph plus one extra edge; greedy deletion in
    lexicographic edge order of any edge whose removal keeps the graph
    dependent converges to the unique minimal dependent subset.  The result
    is restricted to its vertex span.
    """
    if g.m != 2 * g.n - 2:
        raise ValueError(f"expected 2n - 2 = {2 * g.n - 2} edges, got {g.m}")
    if is_sparse(g).independent:
        raise ValueError("graph is independent, there is no circuit inside")
    cur = g
    while True:
        for e in cur.sorted_edges():
            cand = cur.minus_edge(e)
            if not is_sparse(cand).independent:
                cur = cand
                break
        else:
            return cur.restricted_to_span()


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components in ascending order of their smallest vertex."""
    adj = {v: set() for v in g.vertices}
    for i, j in g.edges:
        adj[i].add(j)
        adj[j].add(i)
    seen = set()
    comps = []
    for v in g.sorted_vertices():
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def separation_pairs(g: Graph) -> list[Edge]:
    """All vertex pairs whose removal disconnects a 2-connected graph.

    Pairs come back in lexicographic order.  Rejects graphs that are
    disconnected or have a cut vertex, since a separation pair is only
    meaningful for 2-connected input.
    """
    if g.n < 3:
        raise ValueError("separation pairs need at least three vertices")
    if not is_connected(g):
        raise ValueError("graph is not connected")
    for v in g.sorted_vertices():
        if not is_connected(g.minus_vertex(v)):
            raise ValueError(f"graph has a cut vertex at {v}")
    pairs = []
    for u, v in itertools.combinations(g.sorted_vertices(), 2):
        rest = g.induced(g.vertices - {u, v})
        if rest.n >= 2 and not is_connected(rest):
            pairs.append((u, v))
    return pairs


def two_split(g: Graph, pair) -> tuple[Graph, Graph]:
    """Split a circuit at a separation pair into two smaller circuits.

    Removing the pair from a circuit leaves exactly two components; each side
    keeps its component plus both separation vertices and gains the new
    shared edge uv.  The side containing the smallest vertex label comes
    first.
    """
    u, v = edge(*pair)
    if not is_circuit(g):
        raise ValueError("two_split needs a rigidity circuit")
    if g.has_edge(u, v):
        raise ValueError(f"{(u, v)} is an edge, not a separation pair")
    comps = connected_components(g.induced(g.vertices - {u, v}))
    if len(comps) != 2:
        raise ValueError(f"removing {(u, v)} leaves {len(comps)} components, not 2")
    sides = []
    for comp in comps:
        keep = set(comp) | {u, v}
        sides.append(g.induced(keep).plus_edge((u, v)))
    return sides[0], sides[1]


def parse_graph_text(text: str) -> Graph:
    """Parse the plain text graph format.

    First meaningful line is `n <count>`, then one `i j` edge per line.
    Blank lines and `#` comments are skipped.  Vertices are 1..count.
    Errors carry the offending line number.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ValueError(f"line {lineno}: expected header 'n <count>', got {raw!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise ValueError(f"line {lineno}: vertex count {parts[1]!r} is not an integer") from None
            if n < 1:
                raise ValueError(f"line {lineno}: vertex count must be positive")
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected an edge 'i j', got {raw!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: edge endpoints must be integers, got {raw!r}") from None
        if i == j:
            raise ValueError(f"line {lineno}: self-loop at vertex {i}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"line {lineno}: endpoint outside 1..{n}")
        e = edge(i, j)
        if e in edges:
            raise ValueError(f"line {lineno}: duplicate edge {e}")
        edges.append(e)
    if n is None:
        raise ValueError("empty graph file, expected a 'n <count>' header")
    return Graph.from_edges(edges, range(1, n + 1))


def format_graph_text(g: Graph) -> str:
    """Inverse of parse_graph_text; vertices are renumbered 1..max label."""
    top = max(g.vertices) if g.vertices else 0
    lines = [f"n {top}"]
    lines.extend(f"{i} {j}" for i, j in g.sorted_edges())
    return "\n".join(lines) + "\n"
