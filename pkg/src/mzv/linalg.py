"""Exact rational rank and span membership over the weight-k word basis.

Relation polynomials are coordinatized against the canonical admissible
basis of their weight (column i is the word with interior bits i, so
the index is computed directly from the packed bits).  Rows are cleared
to primitive integer vectors and eliminated fraction-free: each
combination step cancels the leading column and divides the result by
its content, which keeps intermediate entries small in practice while
staying exact.

Pivoting follows the first nonzero column; rows are processed sparsest
first, which lets the two-term duality rows pivot cheaply before the
denser derivation rows arrive.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from time import monotonic

from ._rowops import combine_primitive
from .poly import Poly
from .words import Word

Row = tuple[list[int], list[int]]


class BudgetExceeded(Exception):
    """Raised when an elimination runs past its deadline."""


def column_of_word(w: Word, k: int) -> int:
    """Column index of an admissible weight-k word (its interior bits)."""
    if w.length != k:
        raise ValueError(f"word {w} does not have weight {k}")
    if not w.is_admissible():
        raise ValueError(f"word {w} is not admissible")
    return w.bits >> 1


def word_of_column(k: int, i: int) -> Word:
    return Word(k, i << 1 | 1)


def poly_to_row(p: Poly, k: int) -> Row:
    """Primitive integer coordinate row of a homogeneous weight-k poly."""
    entries = []
    denom = 1
    for w, c in p.terms.items():
        entries.append((column_of_word(w, k), c))
        if isinstance(c, Fraction):
            denom = denom * c.denominator // gcd(denom, c.denominator)
    entries.sort()
    cols = [i for i, _ in entries]
    vals = [int(c * denom) for _, c in entries]
    g = 0
    for v in vals:
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        vals = [v // g for v in vals]
    return cols, vals


class Echelon:
    """Incremental echelon form; pivot rows are primitive and positive."""

    __slots__ = ("pivots",)

    def __init__(self):
        self.pivots: dict[int, Row] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def copy(self) -> "Echelon":
        out = Echelon()
        out.pivots = dict(self.pivots)  # rows are never mutated
        return out

    def reduce(self, cols, vals, deadline=None):
        """Eliminate leading columns against the pivots; returns the rest."""
        pivots = self.pivots
        steps = 0
        while cols:
            hit = pivots.get(cols[0])
            if hit is None:
                break
            pc, pv = hit
            a = vals[0]
            b = pv[0]
            g = gcd(a, b)
            cols, vals = combine_primitive(b // g, cols, vals,
                                           -(a // g), pc, pv)
            steps += 1
            if deadline is not None and steps % 8 == 0 \
                    and monotonic() > deadline:
                raise BudgetExceeded
        return cols, vals

    def add(self, cols, vals, deadline=None) -> bool:
        """Insert a row; returns True if it increased the rank."""
        if deadline is not None and monotonic() > deadline:
            raise BudgetExceeded
        cols, vals = self.reduce(cols, vals, deadline)
        if not cols:
            return False
        if vals[0] < 0:
            vals = [-v for v in vals]
        self.pivots[cols[0]] = (cols, vals)
        return True

    def contains(self, cols, vals, deadline=None) -> bool:
        cols, _ = self.reduce(list(cols), list(vals), deadline)
        return not cols


def _sorted_rows(rows: list[Row]) -> list[Row]:
    # sparsest first; fully deterministic tie-break
    return sorted(rows, key=lambda r: (len(r[0]), r[0], r[1]))


class RelationMatrix:
    """Relation vectors of one fixed weight over exact rationals."""

    def __init__(self, weight: int, rows: list[Row]):
        self.weight = weight
        self.rows = rows
        self._echelon: Echelon | None = None

    @classmethod
    def from_polys(cls, weight: int, polys: list[Poly]) -> "RelationMatrix":
        rows = []
        for p in polys:
            if p.is_zero():
                continue
            rows.append(poly_to_row(p, weight))
        return cls(weight, rows)

    def echelon(self, deadline=None) -> Echelon:
        if self._echelon is None:
            ech = Echelon()
            for cols, vals in _sorted_rows(self.rows):
                ech.add(list(cols), list(vals), deadline)
            self._echelon = ech
        return self._echelon

    def rank(self, deadline=None) -> int:
        return self.echelon(deadline).rank

    def union(self, other: "RelationMatrix") -> "RelationMatrix":
        if self.weight != other.weight:
            raise ValueError(
                f"weight mismatch: {self.weight} vs {other.weight}")
        return RelationMatrix(self.weight, self.rows + other.rows)

    def rank_union(self, other: "RelationMatrix", deadline=None) -> int:
        """Rank of the union span, extending this matrix's echelon."""
        if self.weight != other.weight:
            raise ValueError(
                f"weight mismatch: {self.weight} vs {other.weight}")
        ech = self.echelon(deadline).copy()
        for cols, vals in _sorted_rows(other.rows):
            ech.add(list(cols), list(vals), deadline)
        return ech.rank

    def in_span(self, p: Poly, deadline=None) -> bool:
        """True iff p is a rational combination of the stored rows."""
        if p.is_zero():
            return True
        if not p.is_homogeneous(self.weight):
            raise ValueError(f"element is not homogeneous of weight "
                             f"{self.weight}")
        cols, vals = poly_to_row(p, self.weight)
        return self.echelon(deadline).contains(cols, vals, deadline)


def rank(m: RelationMatrix, deadline=None) -> int:
    return m.rank(deadline)


def in_span(p: Poly, m: RelationMatrix, deadline=None) -> bool:
    return m.in_span(p, deadline)


def dim_intersection(a: RelationMatrix, b: RelationMatrix,
                     deadline=None) -> int:
    """dim(span A intersect span B) by inclusion-exclusion."""
    if a.weight != b.weight:
        raise ValueError(f"weight mismatch: {a.weight} vs {b.weight}")
    return a.rank(deadline) + b.rank(deadline) - a.rank_union(b, deadline)
