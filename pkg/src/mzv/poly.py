"""Finite rational linear combinations of words (the noncommutative side).

A ``Poly`` wraps a dict mapping :class:`~mzv.words.Word` to a nonzero
rational coefficient (``int`` or ``fractions.Fraction``; the two hash
and compare consistently, so mixing them is safe).  Instances are
treated as immutable: every operation returns a fresh ``Poly`` and the
zero-coefficient invariant is restored on construction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .words import EMPTY_WORD, Word

Coeff = int | Fraction


class Poly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, Coeff] | None = None):
        if terms is None:
            self.terms: dict[Word, Coeff] = {}
        else:
            self.terms = {w: c for w, c in terms.items() if c}

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def one() -> "Poly":
        return Poly({EMPTY_WORD: 1})

    @staticmethod
    def from_word(w: Word, c: Coeff = 1) -> "Poly":
        return Poly({w: c})

    @staticmethod
    def from_words(ws: Iterable[Word]) -> "Poly":
        out: dict[Word, Coeff] = {}
        for w in ws:
            out[w] = out.get(w, 0) + 1
        return Poly(out)

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                del out[w]
        p = Poly.__new__(Poly)
        p.terms = out
        return p

    def __sub__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) - c
            if s:
                out[w] = s
            else:
                del out[w]
        p = Poly.__new__(Poly)
        p.terms = out
        return p

    def __neg__(self) -> "Poly":
        p = Poly.__new__(Poly)
        p.terms = {w: -c for w, c in self.terms.items()}
        return p

    def scale(self, c: Coeff) -> "Poly":
        if not c:
            return Poly()
        p = Poly.__new__(Poly)
        p.terms = {w: c * v for w, v in self.terms.items()}
        return p

    def __mul__(self, other: "Poly | Coeff") -> "Poly":
        """Concatenation product, or scalar multiple."""
        if not isinstance(other, Poly):
            return self.scale(other)
        out: dict[Word, Coeff] = {}
        for v, cv in self.terms.items():
            for w, cw in other.terms.items():
                key = v.concat(w)
                s = out.get(key, 0) + cv * cw
                if s:
                    out[key] = s
                else:
                    del out[key]
        p = Poly.__new__(Poly)
        p.terms = out
        return p

    def __rmul__(self, other: Coeff) -> "Poly":
        return self.scale(other)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = Poly.one()
        for _ in range(n):
            out = out * self
        return out

    # -- predicates and views ------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coeff(self, w: Word) -> Coeff:
        return self.terms.get(w, 0)

    def sorted_terms(self) -> Iterator[tuple[Word, Coeff]]:
        """Terms in the canonical order (length, then packed value)."""
        return iter(sorted(self.terms.items()))

    def is_homogeneous(self, k: int | None = None) -> bool:
        weights = {w.length for w in self.terms}
        if k is None:
            return len(weights) <= 1
        return weights <= {k}

    def min_weight(self) -> int:
        """Smallest weight among stored words (0 for the zero poly)."""
        return min((w.length for w in self.terms), default=0)

    def max_weight(self) -> int:
        return max((w.length for w in self.terms), default=0)

    def in_h0(self) -> bool:
        """True iff every stored word is admissible."""
        return all(w.is_admissible() for w in self.terms)

    def homogeneous_part(self, k: int) -> "Poly":
        return Poly({w: c for w, c in self.terms.items() if w.length == k})

    def homogeneous_parts(self) -> dict[int, "Poly"]:
        parts: dict[int, dict[Word, Coeff]] = {}
        for w, c in self.terms.items():
            parts.setdefault(w.length, {})[w] = c
        return {k: Poly(d) for k, d in sorted(parts.items())}

    def map_words(self, f) -> "Poly":
        """Linear extension of a word-to-word map f."""
        out: dict[Word, Coeff] = {}
        for w, c in self.terms.items():
            key = f(w)
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                del out[key]
        return Poly(out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for w, c in self.sorted_terms():
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            body = str(w) if mag == 1 else f"{mag}*{w}"
            bits.append(f"{sign} {body}")
        head = bits[0].lstrip("+ ").replace("- ", "-", 1) if bits else ""
        return " ".join([head] + bits[1:])

    __repr__ = __str__
