"""Linear operators on the word algebra: tau, partial_n, theta_l, Delta_u.

* ``tau`` is the anti-automorphism reversing each word and swapping the
  letters; ``(1 - tau)`` of an admissible word is a duality relation.
* ``partial(n, .)`` is the degree-n derivation determined by
  ``partial_n(x) = -partial_n(y) = x (x+y)^(n-1) y`` and the Leibniz
  rule; it raises weight by n and preserves the admissible subalgebra,
  where its image consists of kernel relations.
* ``theta(l, .)`` is the degree-l homogeneous part of
  ``exp(sum_n partial_n / n)``, computed by the partition formula over
  the commuting ``partial_n``.
* ``delta_u`` / ``delta_u_inv`` are the substitution automorphisms of
  the power-series extension in an indeterminate u, truncated at a
  weight cutoff; the u^l coefficient of ``delta_u`` recovers ``theta_l``.

Single-letter derivation images and per-word operator images are
memoized; the caches are write-once and safe to share.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .poly import Coeff, Poly
from .words import Word


# -- duality -----------------------------------------------------------


def tau(p: Poly) -> Poly:
    """Anti-automorphism with tau(x) = y, tau(y) = x, applied linearly."""
    return p.map_words(Word.tau)


def duality(p: Poly) -> Poly:
    """(1 - tau) applied to p."""
    return p - tau(p)


# -- derivations -------------------------------------------------------


@lru_cache(maxsize=None)
def _insertions(n: int) -> tuple[tuple[int, int], ...]:
    """Packed middle words x v y, v over {x,y}^(n-1), as (bits, length)."""
    return tuple(((v << 1 | 1), n + 1) for v in range(1 << (n - 1)))


@lru_cache(maxsize=None)
def _partial_word(n: int, w: Word) -> Poly:
    """partial_n of a single word via the Leibniz expansion."""
    length, bits = w
    acc: dict[Word, Coeff] = {}
    for i in range(length):
        shift = length - 1 - i
        letter_is_y = bits >> shift & 1
        sign = -1 if letter_is_y else 1
        prefix = bits >> (shift + 1)
        suffix = bits & (1 << shift) - 1
        for mid_bits, mid_len in _insertions(n):
            nb = (prefix << mid_len | mid_bits) << shift | suffix
            key = Word(length + n, nb)
            s = acc.get(key, 0) + sign
            if s:
                acc[key] = s
            elif key in acc:
                del acc[key]
    return Poly(acc)


def partial(n: int, p: Poly) -> Poly:
    """The derivation partial_n extended linearly; partial_n(1) = 0."""
    if n < 1:
        raise ValueError(f"derivation index must be positive, got {n}")
    out = Poly.zero()
    for w, c in p.terms.items():
        if w.length:
            out = out + _partial_word(n, w).scale(c)
    return out


# -- homogeneous parts of the exponential ------------------------------


@lru_cache(maxsize=None)
def _partitions(l: int) -> tuple[tuple[int, ...], ...]:
    """Partitions of l as descending tuples."""
    def gen(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for part in range(min(rest, maxpart), 0, -1):
            for tail in gen(rest - part, part):
                yield (part,) + tail
    return tuple(gen(l, l))


def _symmetry_factor(parts: tuple[int, ...]) -> int:
    """z_lambda = prod_j j^(m_j) m_j! over part multiplicities m_j."""
    z = 1
    mult = 1
    for i, part in enumerate(parts):
        mult = mult + 1 if i and parts[i - 1] == part else 1
        z *= part * mult
    return z


@lru_cache(maxsize=None)
def _theta_word(l: int, w: Word) -> Poly:
    acc = Poly.zero()
    for parts in _partitions(l):
        q = Poly.from_word(w)
        for n in parts:
            q = partial(n, q)
        acc = acc + q.scale(Fraction(1, _symmetry_factor(parts)))
    return acc


def theta(l: int, p: Poly) -> Poly:
    """Degree-l part of exp(sum_n partial_n / n); theta_0 is the identity."""
    if l < 0:
        raise ValueError(f"theta degree must be >= 0, got {l}")
    if l == 0:
        return p
    out = Poly.zero()
    for w, c in p.terms.items():
        out = out + _theta_word(l, w).scale(c)
    return out


# -- substitution automorphism of h[[u]] -------------------------------


class UPoly:
    """Element of the u-power-series extension, truncated.

    ``coeffs`` maps a u-power to a nonzero Poly.  Every operation here
    preserves the invariant that no zero Poly is stored.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, Poly] | None = None):
        self.coeffs = {l: p for l, p in (coeffs or {}).items() if p}

    def coeff(self, l: int) -> Poly:
        return self.coeffs.get(l, Poly.zero())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, UPoly) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({p})*u^{l}" for l, p in sorted(self.coeffs.items()))


# letter image tables: lists of (u-power, word, sign); every term of an
# image has weight = 1 + u-power, so the weight cutoff also bounds the
# u-degree of any truncated product.

@lru_cache(maxsize=None)
def _image_x(cutoff: int) -> tuple[tuple[int, Word, int], ...]:
    # x / (1 - y u): u^j term is x y^j
    return tuple((j, Word(j + 1, (1 << j) - 1), 1) for j in range(cutoff))


@lru_cache(maxsize=None)
def _image_y(cutoff: int) -> tuple[tuple[int, Word, int], ...]:
    # (1 - x u - y u) y / (1 - y u): y at u^0, then -x y^j at u^j
    out = [(0, Word(1, 1), 1)]
    out += [(j, Word(j + 1, (1 << j) - 1), -1) for j in range(1, cutoff)]
    return tuple(out)


@lru_cache(maxsize=None)
def _image_x_inv(cutoff: int) -> tuple[tuple[int, Word, int], ...]:
    # x (1 - x u - y u) / (1 - x u): x at u^0, then -x^j y at u^j
    out = [(0, Word(1, 0), 1)]
    out += [(j, Word(j + 1, 1), -1) for j in range(1, cutoff)]
    return tuple(out)


@lru_cache(maxsize=None)
def _image_y_inv(cutoff: int) -> tuple[tuple[int, Word, int], ...]:
    # y / (1 - x u): u^j term is x^j y
    return tuple((j, Word(j + 1, 1), 1) for j in range(cutoff))


def _substitute(p: Poly, cutoff: int, image_x, image_y) -> UPoly:
    if any(w.length > cutoff for w in p.terms):
        raise ValueError("cutoff below the weight of the input")
    ix = image_x(cutoff + 1)
    iy = image_y(cutoff + 1)
    acc: dict[tuple[int, Word], Coeff] = {}
    for w, c in p.terms.items():
        # fold the letter images left to right under both truncations
        cur: dict[tuple[int, Word], Coeff] = {(0, Word(0, 0)): c}
        for i in range(w.length):
            letter_is_y = w.bits >> (w.length - 1 - i) & 1
            image = iy if letter_is_y else ix
            nxt: dict[tuple[int, Word], Coeff] = {}
            for (pu, pw), pc in cur.items():
                for ju, jw, js in image:
                    u = pu + ju
                    if u > cutoff or pw.length + jw.length > cutoff:
                        continue
                    key = (u, pw.concat(jw))
                    s = nxt.get(key, 0) + pc * js
                    if s:
                        nxt[key] = s
                    elif key in nxt:
                        del nxt[key]
            cur = nxt
        for key, v in cur.items():
            s = acc.get(key, 0) + v
            if s:
                acc[key] = s
            elif key in acc:
                del acc[key]
    grouped: dict[int, dict[Word, Coeff]] = {}
    for (u, w), v in acc.items():
        grouped.setdefault(u, {})[w] = v
    return UPoly({u: Poly(d) for u, d in grouped.items()})


def delta_u(p: Poly, cutoff: int) -> UPoly:
    """Substitution automorphism Delta_u, truncated at the cutoff.

    Both the total {x,y}-weight and the u-power of kept terms are
    bounded by ``cutoff``; the u^0 part is p itself and the u^l part
    equals theta(l, p) wherever the truncation keeps it whole.
    """
    return _substitute(p, cutoff, _image_x, _image_y)


def delta_u_inv(p: Poly, cutoff: int) -> UPoly:
    """Inverse substitution automorphism, truncated at the cutoff."""
    return _substitute(p, cutoff, _image_x_inv, _image_y_inv)
