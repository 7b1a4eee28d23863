"""Slow reference implementations the fast library code is checked against."""

from __future__ import annotations

import itertools
from fractions import Fraction

from circuitpoly.graphs import Graph


def sparse_by_enumeration(g: Graph):
    """Check 2|V'| - 3 on every vertex subset directly.

    Returns (independent, witness) where witness is a violating subset or
    None.  Exponential; only for small test graphs.
    """
    vs = g.sorted_vertices()
    for size in range(2, len(vs) + 1):
        for sub in itertools.combinations(vs, size):
            keep = set(sub)
            count = sum(1 for i, j in g.edges if i in keep and j in keep)
            if count > 2 * size - 3:
                return False, frozenset(sub)
    return True, None


def minimal_dependent_subsets(g: Graph):
    """All inclusion-minimal dependent edge subsets, by brute force."""
    edges = g.sorted_edges()
    dependent = []
    for size in range(1, len(edges) + 1):
        for sub in itertools.combinations(edges, size):
            cand = Graph.from_edges(sub)
            ok, _ = sparse_by_enumeration(cand)
            if ok:
                continue
            if any(set(d) <= set(sub) for d in dependent):
                continue
            dependent.append(sub)
    return [Graph.from_edges(sub) for sub in dependent]


def integer_determinant(rows):
    """Exact determinant of a square matrix of ints/Fractions.

    Fraction-free on integer input via Bareiss elimination; falls back to
    Fraction arithmetic if any entry is not an int.
    """
    n = len(rows)
    m = [list(r) for r in rows]
    for r in m:
        if len(r) != n:
            raise ValueError("matrix is not square")
    if n == 0:
        return 1
    if any(not isinstance(x, int) for r in m for x in r):
        m = [[Fraction(x) for x in r] for r in m]
        det = Fraction(1)
        for k in range(n):
            piv = next((i for i in range(k, n) if m[i][k] != 0), None)
            if piv is None:
                return 0 if isinstance(det, int) else Fraction(0)
            if piv != k:
                m[k], m[piv] = m[piv], m[k]
                det = -det
            det *= m[k][k]
            for i in range(k + 1, n):
                f = m[i][k] / m[k][k]
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
        return det
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def random_graph(rng, max_n=7):
    """A random graph on 2..max_n vertices with a random edge subset."""
    n = rng.randint(2, max_n)
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    density = rng.random()
    edges = [e for e in pairs if rng.random() < density]
    return Graph.from_edges(edges, range(1, n + 1))
