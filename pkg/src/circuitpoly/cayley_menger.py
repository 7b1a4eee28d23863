"""The planar squared-distance ideal: generators and membership testing.

For n labeled points in the plane, the bordered matrix with a 0/1 border
row and column and the squared distances x_{i,j} off the diagonal has rank
at most four.  Its 5x5 minors therefore vanish on every planar
configuration and generate the ideal of algebraic relations among the
squared distances.  The minor on a single 4-point subset (border included)
is the circuit polynomial of the complete graph on those points; these are
the working generators for everything else in the package.

Membership of a polynomial in the ideal is tested by exact evaluation at
random rational configurations.  A nonzero value disproves membership
outright; twenty zero evaluations make membership overwhelmingly likely
for the low degrees handled here.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .poly import MultiPoly, VarId, determinant

_ZERO = MultiPoly.zero()
_ONE = MultiPoly.one()


@dataclass(frozen=True)
class CayleyMatrixSpec:
    """Bordered squared-distance matrix on a tuple of point labels.

    Row and column 0 are the border (0 in the corner, 1 elsewhere); entry
    (i, j) for distinct labels is the variable x_{labels[i-1], labels[j-1]}.
    """

    labels: tuple[int, ...]
    rows: tuple[tuple[MultiPoly, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.labels) + 1


def cayley_matrix(labels) -> CayleyMatrixSpec:
    labels = tuple(labels)
    if len(set(labels)) != len(labels):
        raise ValueError(f"repeated point labels in {labels!r}")
    if any(not isinstance(v, int) or v < 1 for v in labels):
        raise ValueError(f"point labels must be positive integers, got {labels!r}")
    rows = [tuple([_ZERO] + [_ONE] * len(labels))]
    for a in labels:
        rows.append(
            tuple(
                [_ONE] + [MultiPoly.var(a, b) if a != b else _ZERO for b in labels]
            )
        )
    return CayleyMatrixSpec(labels, tuple(rows))


_K4_CACHE: dict[tuple[int, ...], MultiPoly] = {}


def k4_polynomial(labels) -> MultiPoly:
    """Circuit polynomial of the complete graph on four points.

    The 5x5 bordered determinant on the four labels, content-stripped and
    sign-normalized.  Results are cached per label set.
    """
    key = tuple(sorted(labels))
    if len(key) != 4:
        raise ValueError(f"k4_polynomial needs exactly 4 labels, got {labels!r}")
    p = _K4_CACHE.get(key)
    if p is None:
        p = determinant(cayley_matrix(key).rows).normalized()
        _K4_CACHE[key] = p
    return p


def standard_generators(n: int, minor_size: int = 5, full: bool = False) -> list[MultiPoly]:
    """Generators of the ideal for n points.

    By default, one K4 polynomial per 4-point subset: that is the set the
    rest of the package works with.  With full=True, every 5x5 minor of the
    bordered matrix (each normalized; transpose-equal minors appear once,
    other coincidences are not deduplicated).
    """
    if minor_size != 5:
        raise ValueError("only 5x5 minors exist in the plane; minor_size must be 5")
    if not isinstance(n, int) or n < 4:
        raise ValueError(f"need at least 4 points, got n={n!r}")
    if not full:
        return [
            k4_polynomial(sub) for sub in itertools.combinations(range(1, n + 1), 4)
        ]
    spec = cayley_matrix(range(1, n + 1))
    out = []
    indices = range(n + 1)
    for rsel in itertools.combinations(indices, 5):
        for csel in itertools.combinations(indices, 5):
            if csel < rsel:
                continue
            sub = [[spec.rows[i][j] for j in csel] for i in rsel]
            det = determinant(sub)
            if det:
                out.append(det.normalized())
    return out


@dataclass(frozen=True)
class Realization:
    """Rational planar coordinates for points labeled 1..n."""

    points: tuple[tuple[Fraction, Fraction], ...]

    @property
    def n(self) -> int:
        return len(self.points)

    def squared_distance(self, i: int, j: int) -> Fraction:
        xi, yi = self.points[i - 1]
        xj, yj = self.points[j - 1]
        return (xi - xj) ** 2 + (yi - yj) ** 2

    def distance_assignment(self, variables) -> dict[VarId, Fraction]:
        return {(i, j): self.squared_distance(i, j) for i, j in variables}

    def to_json_obj(self) -> list:
        return [
            [x.numerator, x.denominator, y.numerator, y.denominator]
            for x, y in self.points
        ]

    @staticmethod
    def from_json_obj(obj) -> "Realization":
        pts = []
        for entry in obj:
            if len(entry) != 4:
                raise ValueError(f"bad realization point {entry!r}")
            nx, dx, ny, dy = (int(v) for v in entry)
            pts.append((Fraction(nx, dx), Fraction(ny, dy)))
        return Realization(tuple(pts))


def sample_realization(n: int, seed: int = 0, coordinate_bound: int = 1000) -> Realization:
    """Deterministic random configuration of n distinct rational points.

    All coordinates of one realization share a denominator, which keeps the
    integers produced by clearing it small.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"need a positive point count, got {n!r}")
    if coordinate_bound < 2:
        raise ValueError("coordinate_bound must be at least 2")
    rng = random.Random(f"realization:{n}:{seed}:{coordinate_bound}")
    den = rng.randint(1, coordinate_bound)
    pts: list[tuple[Fraction, Fraction]] = []
    while len(pts) < n:
        pt = (
            Fraction(rng.randint(-coordinate_bound, coordinate_bound), den),
            Fraction(rng.randint(-coordinate_bound, coordinate_bound), den),
        )
        if pt in pts:
            continue
        pts.append(pt)
    return Realization(tuple(pts))


@dataclass(frozen=True)
class VanishingVerdict:
    """Outcome of the evaluation-based membership test.

    Falsy when some sampled configuration gave a nonzero value; the
    configuration and the value are kept as the witness.
    """

    vanishes: bool
    trials: int
    witness: Realization | None = None
    witness_value: Fraction | None = None

    def __bool__(self):
        return self.vanishes


def _evaluate_scaled(p: MultiPoly, real: Realization, hom_degree: int):
    """p at the squared distances of real, times a known positive constant.

    Clearing the shared denominator D turns each squared distance into an
    integer while scaling a degree-h evaluation by D^(2h), so the sign and
    zeroness of the integer evaluation match the rational one.
    """
    den = 1
    for x, y in real.points:
        den = lcm(den, x.denominator, y.denominator)
    scaled = [
        (x.numerator * (den // x.denominator), y.numerator * (den // y.denominator))
        for x, y in real.points
    ]
    assignment = {}
    for i, j in p.support():
        xi, yi = scaled[i - 1]
        xj, yj = scaled[j - 1]
        assignment[(i, j)] = (xi - xj) ** 2 + (yi - yj) ** 2
    return p.evaluate(assignment), den ** (2 * hom_degree)


def vanishes_on_variety(p: MultiPoly, trials: int = 20, seed: int = 0) -> VanishingVerdict:
    """Test whether p vanishes at `trials` random planar configurations.

    Exact rational arithmetic throughout, so zero means zero.  A nonzero
    value is returned with its witness configuration; it proves p is not a
    relation among planar squared distances.  Homogeneous polynomials are
    evaluated over the integers after clearing denominators.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    support = p.support()
    if not support:
        if p:
            return VanishingVerdict(False, 0, Realization(()), Fraction(p.evaluate({})))
        return VanishingVerdict(True, 0)
    n = max(max(v) for v in support)
    hom = p.homogeneous_degree()
    for t in range(trials):
        real = sample_realization(n, seed=seed * 1_000_003 + t)
        if hom is not None:
            value, scale = _evaluate_scaled(p, real, hom)
            if value:
                return VanishingVerdict(False, t + 1, real, Fraction(value, scale))
        else:
            assignment = real.distance_assignment(support)
            value = p.evaluate(assignment)
            if value:
                return VanishingVerdict(False, t + 1, real, Fraction(value))
    return VanishingVerdict(True, trials)
