"""Exact circuit polynomials of the planar squared-distance ideal.

The package computes, for a rigidity circuit on up to seven or so vertices,
the unique (up to scale) polynomial supported on that circuit inside the
ideal of 5x5 minors of the bordered squared-distance matrix.  The
computation decomposes the circuit into a binary tree with complete-K4
leaves, then eliminates one variable per tree node with Sylvester
resultants, identifying the circuit polynomial factor at every step.
"""

from .graphs import Edge, Graph, edge, is_circuit, is_laman, is_sparse
from .poly import MultiPoly, coeffs_in, exact_divide, resultant, stats
from .cayley_menger import k4_polynomial, sample_realization, vanishes_on_variety
from .construction import ResultantTreeNode, build_resultant_tree, combinatorial_resultant

__all__ = [
    "Edge",
    "Graph",
    "edge",
    "is_circuit",
    "is_laman",
    "is_sparse",
    "MultiPoly",
    "coeffs_in",
    "exact_divide",
    "resultant",
    "stats",
    "k4_polynomial",
    "sample_realization",
    "vanishes_on_variety",
    "ResultantTreeNode",
    "build_resultant_tree",
    "combinatorial_resultant",
    "CircuitPolyRecord",
    "compute_circuit_polynomial",
    "verify_against_known",
]

__version__ = "0.1.0"
