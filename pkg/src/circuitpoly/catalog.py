"""Named benchmark circuits and their verified polynomial statistics.

The labelings are fixed so that every run reproduces identical trees,
polynomials, and serializations.  `wheel4` is the 4-wheel with rim 1,2,3,4
and hub 5; `wheel5` puts the hub at 6.  `double-banana` glues two K4 graphs
along the removed edge 14.  `desargues-plus-one` is the Desargues graph
plus the edge 16.  `k33-plus-one` is K(3,3) on parts {1,4,5} and {2,3,6}
plus the edge 45; its circuit polynomial is out of reach of a single
resultant step (see `pipeline.impossibility_check_k33`), so the polynomial
pipeline refuses it.  The two seven-vertex entries extend the double banana
by one K4 glued along a triangle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import Graph


def _wheel(rim, hub) -> Graph:
    edges = [(rim[k], rim[(k + 1) % len(rim)]) for k in range(len(rim))]
    edges.extend((v, hub) for v in rim)
    return Graph.from_edges(edges)


def _k4(a, b, c, d) -> Graph:
    return Graph.complete([a, b, c, d])


_DOUBLE_BANANA = Graph.from_edges(
    [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (1, 5), (1, 6), (5, 6), (4, 5), (4, 6)]
)

_DESARGUES_PLUS_ONE = Graph.from_edges(
    [(1, 2), (1, 4), (1, 5), (2, 3), (2, 6), (3, 4), (3, 6), (4, 5), (5, 6), (1, 6)]
)

_K33_PLUS_ONE = Graph.from_edges(
    [(a, b) for a in (1, 4, 5) for b in (2, 3, 6)] + [(4, 5)]
)


def _glue(base: Graph, patch: Graph, drop) -> Graph:
    merged = Graph(base.vertices | patch.vertices, base.edges | patch.edges)
    return merged.minus_edge(drop)


NAMED_CIRCUITS: dict[str, Graph] = {
    "k4": _k4(1, 2, 3, 4),
    "wheel4": _wheel((1, 2, 3, 4), 5),
    "wheel5": _wheel((1, 2, 3, 4, 5), 6),
    "double-banana": _DOUBLE_BANANA,
    "desargues-plus-one": _DESARGUES_PLUS_ONE,
    "k33-plus-one": _K33_PLUS_ONE,
    "banana-k4-16": _glue(_DOUBLE_BANANA, _k4(1, 5, 6, 7), (1, 6)),
    "banana-k4-56": _glue(_DOUBLE_BANANA, _k4(4, 5, 6, 7), (5, 6)),
}


@dataclass(frozen=True)
class ExpectedStats:
    """Known-good statistics of a named circuit polynomial.

    `variable_degrees` maps each edge variable to its degree when the
    per-variable profile is part of the contract; None means only the term
    count and homogeneous degree are pinned down.
    """

    term_count: int
    homogeneous_degree: int
    variable_degrees: dict[tuple[int, int], int] | None


def _uniform(g: Graph, d: int) -> dict:
    return {e: d for e in g.sorted_edges()}

EXPECTED_STATS: dict[str, ExpectedStats] = {
    "k4": ExpectedStats(22, 3, _uniform(NAMED_CIRCUITS["k4"], 2)),
    "wheel4": ExpectedStats(843, 8, _uniform(NAMED_CIRCUITS["wheel4"], 4)),
    "double-banana": ExpectedStats(1752, 8, _uniform(NAMED_CIRCUITS["double-banana"], 4)),
    "wheel5": ExpectedStats(273123, 20, _uniform(NAMED_CIRCUITS["wheel5"], 8)),
    "desargues-plus-one": ExpectedStats(
        658175,
        20,
        {**_uniform(NAMED_CIRCUITS["desargues-plus-one"], 8), (1, 6): 12},
    ),
    "k33-plus-one": ExpectedStats(1018050, 18, _uniform(NAMED_CIRCUITS["k33-plus-one"], 8)),
    "banana-k4-16": ExpectedStats(1053933, 20, None),
    "banana-k4-56": ExpectedStats(2579050, 20, None),
}

# (vertex count, homogeneous degree, smallest per-variable degree) for every
# circuit type on at most six vertices; used to bound the smallest degree a
# single elimination step could possibly produce for a given target.
DEGREE_PROFILES: frozenset[tuple[int, int, int]] = frozenset(
    {
        (4, 3, 2),     # K4
        (5, 8, 4),     # 4-wheel
        (6, 8, 4),     # double banana
        (6, 20, 8),    # 5-wheel, Desargues plus edge
        (6, 20, 12),   # Desargues plus edge, worst variable
        (6, 18, 8),    # K33 plus edge
    }
)

# (homogeneous degree, variable degree) choices feeding the K33-plus-one
# impossibility argument.
K33_DEGREE_PAIRS: tuple[tuple[int, int], ...] = ((3, 2), (8, 4), (18, 8), (20, 8), (20, 12))


def find_isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """A vertex bijection carrying g onto h, or None.

    Plain permutation search with degree-sequence pruning; fine for the
    at-most-seven-vertex graphs this package targets.
    """
    if g.n != h.n or g.m != h.m:
        return None
    gs = g.sorted_vertices()
    hs = h.sorted_vertices()
    gdeg = [g.degree(v) for v in gs]
    if sorted(gdeg) != sorted(h.degree(v) for v in hs):
        return None
    hdeg = {v: h.degree(v) for v in hs}
    for perm in itertools.permutations(hs):
        if any(gdeg[k] != hdeg[perm[k]] for k in range(len(gs))):
            continue
        phi = dict(zip(gs, perm))
        if all(h.has_edge(phi[i], phi[j]) for i, j in g.edges):
            return phi
    return None


def match_named_circuit(g: Graph) -> tuple[str, dict[int, int]] | None:
    """Name and isomorphism for a benchmark circuit, if g is one."""
    for name, ref in NAMED_CIRCUITS.items():
        phi = find_isomorphism(g, ref)
        if phi is not None:
            return name, phi
    return None
