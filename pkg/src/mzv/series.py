"""Weight-graded truncated series over the word algebra.

A ``GradedSeries`` is a family of homogeneous polynomials indexed by
weight, kept only up to an explicit cutoff.  It models elements of the
completed algebra such as geometric series ``1/(1-x)``; all the series
expressions used by the identity checks are assembled compositionally
from :func:`geom`, products and sums, never parsed.
"""

from __future__ import annotations

from .operators import theta
from .poly import Poly
from .words import Word


class GradedSeries:
    """Truncated graded element: ``parts[k]`` is the weight-k component."""

    __slots__ = ("cutoff", "parts")

    def __init__(self, cutoff: int, parts: dict[int, Poly] | None = None):
        if cutoff < 0:
            raise ValueError("cutoff must be >= 0")
        self.cutoff = cutoff
        self.parts: dict[int, Poly] = {}
        for k, p in (parts or {}).items():
            if not p:
                continue
            if k > cutoff:
                raise ValueError(f"part of weight {k} above cutoff {cutoff}")
            if not p.is_homogeneous(k):
                raise ValueError(f"part at weight {k} is not homogeneous")
            self.parts[k] = p

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero(cutoff: int) -> "GradedSeries":
        return GradedSeries(cutoff)

    @staticmethod
    def one(cutoff: int) -> "GradedSeries":
        return GradedSeries(cutoff, {0: Poly.one()})

    @staticmethod
    def from_poly(p: Poly, cutoff: int) -> "GradedSeries":
        """Grade a polynomial, discarding words beyond the cutoff."""
        parts = {k: q for k, q in p.homogeneous_parts().items() if k <= cutoff}
        return GradedSeries(cutoff, parts)

    @staticmethod
    def from_word(w: Word, cutoff: int) -> "GradedSeries":
        return GradedSeries.from_poly(Poly.from_word(w), cutoff)

    # -- views -----------------------------------------------------------

    def part(self, k: int) -> Poly:
        return self.parts.get(k, Poly.zero())

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GradedSeries)
                and self.cutoff == other.cutoff and self.parts == other.parts)

    def is_zero(self) -> bool:
        return not self.parts

    def __repr__(self) -> str:
        if not self.parts:
            return f"O(w>{self.cutoff})"
        comps = " ; ".join(f"[{k}] {p}" for k, p in sorted(self.parts.items()))
        return f"{comps} ; O(w>{self.cutoff})"

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "GradedSeries"):
        if self.cutoff != other.cutoff:
            raise ValueError(
                f"cutoff mismatch: {self.cutoff} vs {other.cutoff}")

    def __add__(self, other: "GradedSeries") -> "GradedSeries":
        self._check(other)
        parts = dict(self.parts)
        for k, p in other.parts.items():
            parts[k] = parts[k] + p if k in parts else p
        return GradedSeries(self.cutoff, parts)

    def __sub__(self, other: "GradedSeries") -> "GradedSeries":
        return self + (-other)

    def __neg__(self) -> "GradedSeries":
        return GradedSeries(self.cutoff, {k: -p for k, p in self.parts.items()})

    def __mul__(self, other: "GradedSeries") -> "GradedSeries":
        self._check(other)
        parts: dict[int, Poly] = {}
        for i, p in self.parts.items():
            for j, q in other.parts.items():
                k = i + j
                if k > self.cutoff:
                    continue
                prod = p * q
                parts[k] = parts[k] + prod if k in parts else prod
        return GradedSeries(self.cutoff, parts)

    def scale(self, c) -> "GradedSeries":
        return GradedSeries(self.cutoff,
                            {k: p.scale(c) for k, p in self.parts.items()})

    def map_parts(self, f) -> "GradedSeries":
        """Apply a weight-preserving linear map to every component."""
        return GradedSeries(self.cutoff,
                            {k: f(p) for k, p in self.parts.items()})


def geom(p: Poly, cutoff: int) -> GradedSeries:
    """Geometric series 1 + p + p^2 + ... truncated at the cutoff.

    Requires every word of p to have weight >= 1 so the sum is finite
    weight by weight.
    """
    if not p.is_zero() and p.min_weight() < 1:
        raise ValueError("geometric series requires minimum weight >= 1")
    base = GradedSeries.from_poly(p, cutoff)
    acc = GradedSeries.one(cutoff)
    power = GradedSeries.one(cutoff)
    for _ in range(cutoff):
        power = power * base
        if power.is_zero():
            break
        acc = acc + power
    return acc


def series_mul(a: GradedSeries, b: GradedSeries) -> GradedSeries:
    """Cauchy product of graded components (cutoffs must agree)."""
    return a * b


def apply_theta_series(s: GradedSeries) -> GradedSeries:
    """Apply the exponential operator weight by weight.

    The weight-k output is ``sum_{l+i=k} theta(l, s_i)``; only weights
    up to the cutoff are produced, which is sound because theta_l
    raises weight by exactly l.
    """
    parts: dict[int, Poly] = {}
    for i, p in sorted(s.parts.items()):
        for l in range(0, s.cutoff - i + 1):
            q = theta(l, p)
            if not q:
                continue
            k = i + l
            parts[k] = parts[k] + q if k in parts else q
    return GradedSeries(s.cutoff, parts)


def theta_minus_one(s: GradedSeries) -> GradedSeries:
    """(Theta - 1) applied to a truncated series."""
    return apply_theta_series(s) - s
