"""Exact sparse multivariate arithmetic over squared-distance variables.

Variables are unordered vertex pairs x_{i,j} with i < j.  A monomial is
packed into a single Python integer, one byte of exponent per variable, so
multiplying monomials is one integer addition and dictionaries of packed
keys stay compact.  Slots for every pair on vertices 1..8 are laid out in
lexicographic order up front, which makes the byte order of a packed key
agree with the canonical variable order; later variables are appended on
first use and handled by a slower comparison path.

Polynomials are immutable sparse maps from packed monomial to a nonzero
integer coefficient.  The canonical term order everywhere (leading terms,
serialization) is graded reverse lexicographic with respect to the variable
order x_{1,2} < x_{1,3} < ... : higher total degree wins, ties go to the
monomial whose last differing exponent is smaller.
"""

from __future__ import annotations

import heapq
import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

VarId = tuple[int, int]

_FIELD_MAX = 255


def _canon_var(i, j) -> VarId:
    if not (isinstance(i, int) and isinstance(j, int)):
        raise ValueError(f"variable indices must be integers, got {(i, j)!r}")
    if i == j or i < 1 or j < 1:
        raise ValueError(f"bad variable pair {(i, j)!r}")
    return (i, j) if i < j else (j, i)


class _VarTable:
    """Process-wide slot assignment for variables."""

    def __init__(self, prefix_max_vertex=8):
        self.slot_of: dict[VarId, int] = {}
        self.var_of: list[VarId] = []
        for v in itertools.combinations(range(1, prefix_max_vertex + 1), 2):
            self.slot_of[v] = len(self.var_of)
            self.var_of.append(v)
        self.prefix = len(self.var_of)
        self.extended = False
        self._order: list[int] | None = None

    def slot(self, var: VarId) -> int:
        s = self.slot_of.get(var)
        if s is None:
            var = _canon_var(*var)
            s = self.slot_of.get(var)
            if s is None:
                s = len(self.var_of)
                self.slot_of[var] = s
                self.var_of.append(var)
                self.extended = True
                self._order = None
        return s

    @property
    def width(self) -> int:
        return len(self.var_of)

    def canonical_slots(self) -> list[int]:
        """Slot indices sorted by variable id; identity while not extended."""
        if self._order is None:
            self._order = sorted(range(self.width), key=lambda s: self.var_of[s])
        return self._order


_VARS = _VarTable()


def _pack(exps: dict) -> int:
    m = 0
    for var, e in exps.items():
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"bad exponent {e!r} for variable {var!r}")
        if e > _FIELD_MAX:
            raise ValueError(f"exponent {e} exceeds the supported maximum {_FIELD_MAX}")
        if e:
            m += e << (8 * _VARS.slot(_canon_var(*var)))
    return m


def _unpack(m: int) -> dict[VarId, int]:
    out = {}
    b = m.to_bytes(_VARS.width, "little")
    for s, e in enumerate(b):
        if e:
            out[_VARS.var_of[s]] = e
    return out


def _heap_key(m: int):
    """Key whose minimum is the grevlex-greatest monomial.

    Sorting keys ascending therefore lists terms in canonical leading-first
    order.  The fast path relies on byte order matching variable order,
    which holds while only prefix slots are in use.
    """
    b = m.to_bytes(_VARS.width, "little")
    if not _VARS.extended:
        return (-sum(b), bytes(reversed(b)))
    order = _VARS.canonical_slots()
    return (-sum(b), tuple(b[s] for s in reversed(order)))


def _total_degree(m: int) -> int:
    return sum(m.to_bytes(_VARS.width, "little"))


def _fmadd(acc: dict, poly: dict, mono: int, coeff: int):
    get = acc.get
    if coeff == 1:
        for m, c in poly.items():
            k = m + mono
            acc[k] = get(k, 0) + c
    else:
        for m, c in poly.items():
            k = m + mono
            acc[k] = get(k, 0) + c * coeff


class MultiPoly:
    """Immutable multivariate polynomial with exact integer coefficients."""

    __slots__ = ("_t", "_maxdeg")

    def __init__(self, terms: Iterable = ()):
        """Build from an iterable of (coefficient, exponent map) pairs.

        Exponent maps look like {(1, 2): 2, (3, 4): 1}; duplicate monomials
        accumulate.
        """
        acc: dict[int, int] = {}
        for c, exps in terms:
            if not isinstance(c, int):
                raise ValueError(f"coefficient {c!r} is not an integer")
            m = _pack(dict(exps))
            v = acc.get(m, 0) + c
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
        self._t = acc
        self._maxdeg = None

    @classmethod
    def _raw(cls, d: dict) -> "MultiPoly":
        p = cls.__new__(cls)
        p._t = d
        p._maxdeg = None
        return p

    @staticmethod
    def zero() -> "MultiPoly":
        return _ZERO

    @staticmethod
    def const(c: int) -> "MultiPoly":
        if not isinstance(c, int):
            raise ValueError(f"constant {c!r} is not an integer")
        return MultiPoly._raw({0: c} if c else {})

    @staticmethod
    def one() -> "MultiPoly":
        return _ONE

    @staticmethod
    def var(i: int, j: int) -> "MultiPoly":
        return MultiPoly._raw({1 << (8 * _VARS.slot(_canon_var(i, j))): 1})

    # -- basic queries ----------------------------------------------------

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    @property
    def term_count(self) -> int:
        return len(self._t)

    def _max_total_degree(self) -> int:
        if self._maxdeg is None:
            self._maxdeg = max(map(_total_degree, self._t), default=0)
        return self._maxdeg

    def total_degree(self):
        """Largest total degree of a term, None for the zero polynomial."""
        return self._max_total_degree() if self._t else None

    def is_homogeneous(self) -> bool:
        degs = set(map(_total_degree, self._t))
        return len(degs) <= 1

    def homogeneous_degree(self):
        """Common total degree of all terms, or None if zero or mixed."""
        degs = set(map(_total_degree, self._t))
        if len(degs) == 1:
            return degs.pop()
        return None

    def support(self) -> frozenset[VarId]:
        """Variables that appear with a positive exponent."""
        mask = 0
        for m in self._t:
            mask |= m
        b = mask.to_bytes(_VARS.width, "little")
        return frozenset(_VARS.var_of[s] for s, e in enumerate(b) if e)

    def degree_in(self, var) -> int:
        var = _canon_var(*var)
        shift = 8 * _VARS.slot(var)
        return max(((m >> shift) & _FIELD_MAX for m in self._t), default=0)

    def per_var_degrees(self) -> dict[VarId, int]:
        return {v: self.degree_in(v) for v in sorted(self.support())}

    def leading_term(self):
        """(coefficient, exponent map) of the grevlex-greatest term, or None."""
        if not self._t:
            return None
        m = min(self._t, key=_heap_key)
        return self._t[m], _unpack(m)

    def terms(self):
        """Yield (coefficient, exponent map) pairs in canonical order."""
        for m in sorted(self._t, key=_heap_key):
            yield self._t[m], _unpack(m)

    def content(self) -> int:
        """Nonnegative gcd of all coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self._t.values():
            g = math.gcd(g, c)
            if g == 1:
                break
        return g

    def normalized(self) -> "MultiPoly":
        """Divide out the integer content and make the leading coefficient positive."""
        if not self._t:
            return self
        g = self.content()
        if self._t[min(self._t, key=_heap_key)] < 0:
            g = -g
        if g == 1:
            return self
        return MultiPoly._raw({m: c // g for m, c in self._t.items()})

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly.const(other)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._t == other._t

    __hash__ = None

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self._t.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        get = out.get
        for m, c in b.items():
            v = get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other.__add__(-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return _ZERO
            if other == 1:
                return self
            return MultiPoly._raw({m: c * other for m, c in self._t.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return _ZERO
        if self._max_total_degree() + other._max_total_degree() > _FIELD_MAX:
            raise OverflowError(
                "product degree exceeds the packed exponent capacity"
            )
        if len(a) > len(b):
            a, b = b, a
        acc: dict[int, int] = {}
        for m, c in a.items():
            _fmadd(acc, b, m, c)
        return MultiPoly._raw({m: c for m, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent {k!r} must be a nonnegative integer")
        result = _ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __repr__(self):
        if len(self._t) > 8:
            return f"<MultiPoly with {len(self._t)} terms>"
        return f"MultiPoly <{poly_to_text(self)}>"

    # -- evaluation -------------------------------------------------------

    def evaluate(self, assignment: dict):
        """Exact value at integer or Fraction coordinates.

        Every support variable must be assigned; extra keys are ignored.
        """
        values = {}
        for var, val in assignment.items():
            values[_canon_var(*var)] = val
        slots = []
        for var in self.support():
            if var not in values:
                raise ValueError(f"no value for variable {var}")
            slots.append((_VARS.slot(var), values[var]))
        width = _VARS.width
        powers = {s: {0: 1, 1: v} for s, v in slots}
        total = 0
        for m, c in self._t.items():
            b = m.to_bytes(width, "little")
            v = c
            for s, base in slots:
                e = b[s]
                if e:
                    table = powers[s]
                    p = table.get(e)
                    if p is None:
                        p = table[e] = base ** e
                    v = v * p
            total = total + v
        return total


_ZERO = MultiPoly._raw({})
_ONE = MultiPoly._raw({0: 1})


def strip_monomial_content(p: MultiPoly) -> tuple[MultiPoly, dict[VarId, int]]:
    """Factor out the largest monomial dividing every term.

    Returns (reduced polynomial, exponent map of the removed monomial).
    Almost always a no-op; bails out as soon as the running minimum hits
    zero in every byte.
    """
    if not p._t:
        return p, {}
    width = _VARS.width
    it = iter(p._t)
    mins = bytearray(next(it).to_bytes(width, "little"))
    for m in it:
        if not any(mins):
            break
        b = m.to_bytes(width, "little")
        for s in range(width):
            if b[s] < mins[s]:
                mins[s] = b[s]
    if not any(mins):
        return p, {}
    mono = int.from_bytes(bytes(mins), "little")
    reduced = MultiPoly._raw({m - mono: c for m, c in p._t.items()})
    return reduced, {_VARS.var_of[s]: e for s, e in enumerate(mins) if e}


def exact_divide(p: MultiPoly, d: MultiPoly):
    """Quotient p / d when the division is exact over the integers, else None.

    Standard leading-term elimination under the canonical order, with a heap
    of live remainder monomials so each step finds the next leading term
    cheaply.  The zero divisor is rejected.
    """
    if not isinstance(d, MultiPoly) or not isinstance(p, MultiPoly):
        raise ValueError("exact_divide works on MultiPoly values")
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p:
        return _ZERO
    dd = d._t
    lt_d = min(dd, key=_heap_key)
    lc_d = dd[lt_d]
    width = _VARS.width
    ltd_b = lt_d.to_bytes(width, "little")
    rem = dict(p._t)
    heap = [(*_heap_key(m), m) for m in rem]
    heapq.heapify(heap)
    push = heapq.heappush
    pop = heapq.heappop
    quotient: dict[int, int] = {}
    while heap:
        m = pop(heap)[-1]
        c = rem.get(m)
        if not c:
            continue
        if c % lc_d:
            return None
        mb = m.to_bytes(width, "little")
        if any(x < y for x, y in zip(mb, ltd_b)):
            return None
        ratio = m - lt_d
        qc = c // lc_d
        quotient[ratio] = quotient.get(ratio, 0) + qc
        for dm, dc in dd.items():
            k = dm + ratio
            nv = rem.get(k, 0) - qc * dc
            if nv:
                rem[k] = nv
                push(heap, (*_heap_key(k), k))
            else:
                rem.pop(k, None)
    return MultiPoly._raw({m: c for m, c in quotient.items() if c})


def coeffs_in(p: MultiPoly, var) -> list[MultiPoly]:
    """Coefficient polynomials [a_0, ..., a_r] of p viewed in one variable.

    Reassembling sum(a_k * x^k) recovers p.  A polynomial not involving the
    variable comes back as [p].
    """
    var = _canon_var(*var)
    shift = 8 * _VARS.slot(var)
    buckets: dict[int, dict] = {}
    top = 0
    for m, c in p._t.items():
        e = (m >> shift) & _FIELD_MAX
        if e > top:
            top = e
        buckets.setdefault(e, {})[m - (e << shift)] = c
    return [MultiPoly._raw(buckets.get(e, {})) for e in range(top + 1)]


@dataclass(frozen=True)
class SylvesterMatrix:
    """Sylvester matrix of two polynomials with respect to one variable.

    The first x_degree_g rows carry the coefficients of f, each shifted one
    column further; the remaining x_degree_f rows carry the coefficients of
    g.  When the two degrees differ the staircases are offset accordingly.
    """

    rows: tuple[tuple[MultiPoly, ...], ...]
    var: VarId
    x_degree_f: int
    x_degree_g: int

    @property
    def dimension(self) -> int:
        return self.x_degree_f + self.x_degree_g


def sylvester(f: MultiPoly, g: MultiPoly, var) -> SylvesterMatrix:
    """Build the Sylvester matrix of f and g in the given variable."""
    var = _canon_var(*var)
    if not f or not g:
        raise ValueError("sylvester needs two nonzero polynomials")
    fc = coeffs_in(f, var)
    gc = coeffs_in(g, var)
    r = len(fc) - 1
    s = len(gc) - 1
    if r + s == 0:
        raise ValueError(f"neither polynomial involves x_{var[0]}_{var[1]}")
    dim = r + s
    rows = []
    for i in range(s):
        row = [_ZERO] * dim
        for k, a in enumerate(reversed(fc)):
            row[i + k] = a
        rows.append(tuple(row))
    for i in range(r):
        row = [_ZERO] * dim
        for k, b in enumerate(reversed(gc)):
            row[i + k] = b
        rows.append(tuple(row))
    return SylvesterMatrix(tuple(rows), var, r, s)


def _det_cofactor(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = _ZERO
    for j in range(n):
        entry = rows[0][j]
        if not entry:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = entry * _det_cofactor(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def _det_minors(rows):
    """Division-free determinant by expansion over column subsets.

    Rows are processed sparsest first, so every product pairs a matrix entry
    with an already-accumulated minor; large minors are never multiplied
    together.  A backward pass prunes column subsets that no surviving
    expansion path can reach.
    """
    n = len(rows)
    order = sorted(range(n), key=lambda i: (sum(len(e._t) for e in rows[i]), i))
    inversions = sum(
        1 for a in range(n) for b in range(a + 1, n) if order[a] > order[b]
    )
    ordered = [rows[i] for i in order]
    full = (1 << n) - 1
    needed = [set() for _ in range(n + 1)]
    needed[n].add(full)
    for level in range(n, 0, -1):
        row = ordered[level - 1]
        for mask in needed[level]:
            for j in range(n):
                if mask & (1 << j) and row[j]:
                    needed[level - 1].add(mask ^ (1 << j))
    minors = {0: _ONE}
    for level in range(1, n + 1):
        row = ordered[level - 1]
        nxt = {}
        row_parity = level - 1
        for mask in needed[level]:
            acc: dict[int, int] = {}
            pos = 0
            for j in range(n):
                bit = 1 << j
                if not mask & bit:
                    continue
                entry = row[j]
                if entry:
                    sub = minors.get(mask ^ bit)
                    if sub is not None and sub:
                        outer, inner = entry._t, sub._t
                        if len(outer) > len(inner):
                            outer, inner = inner, outer
                        neg = (row_parity + pos) % 2
                        for m, c in outer.items():
                            _fmadd(acc, inner, m, -c if neg else c)
                pos += 1
            poly = MultiPoly._raw({m: c for m, c in acc.items() if c})
            nxt[mask] = poly
        minors = nxt
    det = minors.get(full, _ZERO)
    return -det if inversions % 2 else det


def determinant(rows) -> MultiPoly:
    """Exact determinant of a square matrix of polynomials.

    Plain cofactor expansion up to dimension four, minor-table expansion
    above that.  Integer entries are accepted and coerced.
    """
    mat = []
    for row in rows:
        mat.append(
            tuple(
                e if isinstance(e, MultiPoly) else MultiPoly.const(e) for e in row
            )
        )
    n = len(mat)
    if n == 0:
        raise ValueError("empty matrix")
    for row in mat:
        if len(row) != n:
            raise ValueError("matrix is not square")
    if n <= 4:
        return _det_cofactor(mat)
    return _det_minors(mat)


def resultant(f: MultiPoly, g: MultiPoly, var) -> MultiPoly:
    """Sylvester resultant of f and g with respect to one variable.

    Zero exactly when f and g share a factor involving the variable (or one
    of them vanishes identically in it while the matrix degenerates).
    """
    return determinant(sylvester(f, g, var).rows)


def predicted_resultant_degree(f_hom: int, g_hom: int, f_xdeg: int, g_xdeg: int) -> int:
    """Homogeneous degree of the resultant of homogeneous f and g.

    For f of homogeneous degree m with degree r in the eliminated variable
    and g likewise (n, s), the nonzero resultant is homogeneous of degree
    m*s + n*r - r*s.
    """
    for v in (f_hom, g_hom, f_xdeg, g_xdeg):
        if not isinstance(v, int) or v < 0:
            raise ValueError("degrees must be nonnegative integers")
    return f_hom * g_xdeg + g_hom * f_xdeg - f_xdeg * g_xdeg


class PolyStats(tuple):
    """(term_count, homogeneous_degree or None, per-variable degree map)."""

    __slots__ = ()

    def __new__(cls, term_count, homogeneous_degree, variable_degrees):
        return tuple.__new__(cls, (term_count, homogeneous_degree, variable_degrees))

    @property
    def term_count(self):
        return self[0]

    @property
    def homogeneous_degree(self):
        return self[1]

    @property
    def variable_degrees(self):
        return self[2]


def stats(p: MultiPoly) -> PolyStats:
    """Term count, homogeneous degree (None if mixed), per-variable degrees."""
    return PolyStats(len(p._t), p.homogeneous_degree(), p.per_var_degrees())


# -- serialization --------------------------------------------------------

_FACTOR_RE = re.compile(r"^x_(\d+)_(\d+)(?:\^(\d+))?$")


def poly_to_text(p: MultiPoly) -> str:
    """Canonical plain text form, terms in leading-first order.

    Each term is `<coeff>*x_i_j^e*...` with the exponent suffix omitted when
    it is one; terms are joined with ` + ` or ` - ` according to sign.
    """
    if not p:
        return "0"
    parts = []
    for idx, (c, exps) in enumerate(p.terms()):
        factors = [
            f"x_{i}_{j}" + (f"^{e}" if e > 1 else "")
            for (i, j), e in sorted(exps.items())
        ]
        mag = abs(c)
        if factors and mag == 1:
            frag = "*".join(factors)
        elif factors:
            frag = "*".join([str(mag)] + factors)
        else:
            frag = str(mag)
        if idx == 0:
            parts.append(frag if c > 0 else "-" + frag)
        else:
            parts.append((" + " if c > 0 else " - ") + frag)
    return "".join(parts)


def poly_from_text(text: str) -> MultiPoly:
    """Parse the plain text polynomial format."""
    toks = text.split()
    if not toks:
        raise ValueError("empty polynomial text")
    if toks == ["0"]:
        return _ZERO
    terms = []
    expect_term = True
    sign = 1
    for tok in toks:
        if not expect_term:
            if tok == "+":
                sign = 1
            elif tok == "-":
                sign = -1
            else:
                raise ValueError(f"expected '+' or '-', got {tok!r}")
            expect_term = True
            continue
        body = tok
        if body.startswith("-"):
            sign = -sign
            body = body[1:]
        coeff = sign
        exps: dict[VarId, int] = {}
        for factor in body.split("*"):
            if factor.isdigit():
                coeff *= int(factor)
                continue
            m = _FACTOR_RE.match(factor)
            if m is None:
                raise ValueError(f"bad factor {factor!r} in term {tok!r}")
            i, j = int(m.group(1)), int(m.group(2))
            e = int(m.group(3)) if m.group(3) else 1
            var = _canon_var(i, j)
            exps[var] = exps.get(var, 0) + e
        terms.append((coeff, exps))
        expect_term = False
        sign = 1
    if expect_term:
        raise ValueError("polynomial text ends with an operator")
    return MultiPoly(terms)


def poly_to_json_obj(p: MultiPoly) -> list:
    """JSON-ready form: a list of [coefficient string, [[i, j, e], ...]]."""
    out = []
    for c, exps in p.terms():
        out.append([str(c), [[i, j, e] for (i, j), e in sorted(exps.items())]])
    return out


def poly_from_json_obj(obj) -> MultiPoly:
    terms = []
    for entry in obj:
        if len(entry) != 2:
            raise ValueError(f"bad polynomial term entry {entry!r}")
        coeff_str, factors = entry
        coeff = int(coeff_str)
        exps: dict[VarId, int] = {}
        for i, j, e in factors:
            var = _canon_var(i, j)
            exps[var] = exps.get(var, 0) + e
        terms.append((coeff, exps))
    return MultiPoly(terms)
