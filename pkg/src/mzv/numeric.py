"""Floating-point evaluation of multiple zeta values, with tail bounds.

``zeta_numeric`` sums the defining nested series over all index tuples
with leading index at most M, using prefix sums so the cost is
O(depth * M) instead of O(M^depth).  The result carries a rigorous
truncation bound: writing a = depth - 1 and k = leading exponent, the
inner (depth-1)-fold ordered sum is at most (1 + ln m)^a / a!, and the
outer tail is bounded by the explicit integral

    sum_{m > M} (1 + ln m)^a / (a! m^k)
        <= M^(1-k)/a! * sum_{j<=a} a!/(a-j)! (1+ln M)^(a-j) / (k-1)^(j+1)

valid once the integrand is decreasing at M (always the case for the
truncations used here; a short explicit sum covers tiny M).

This module is a sanity check on exact relations, never an authority:
values are plain double-precision partial sums, monotone in M.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, exp, factorial, log

import numpy as np

from .poly import Poly
from .words import Word


@dataclass(frozen=True)
class ZetaApprox:
    value: float
    terms_used: int
    tail_bound: float


def _tail_integral(M: float, a: int, k: int) -> float:
    """Closed form of integral_M^inf (1 + ln t)^a t^(-k) dt."""
    u0 = 1.0 + log(M)
    c = k - 1
    total = 0.0
    coeff = 1.0
    for j in range(a + 1):
        total += coeff * u0 ** (a - j) / c ** (j + 1)
        coeff *= a - j
    return M ** (-c) * total


def _f(t: float, a: int, k: int) -> float:
    return (1.0 + log(t)) ** a / t ** k


def tail_bound(ks: tuple[int, ...], terms: int) -> float:
    """Rigorous bound on the truncation error of the nested partial sum."""
    a = len(ks) - 1
    k = ks[0]
    inv_afact = 1.0 / factorial(a)
    # integrand decreasing at t once k (1 + ln t) >= a
    start = terms
    extra = 0.0
    threshold = ceil(exp(max(a / k - 1.0, 0.0)))
    if start < threshold:
        for m in range(start + 1, threshold + 1):
            extra += _f(m, a, k)
        start = threshold
    return inv_afact * (extra + _tail_integral(start, a, k))


def zeta_numeric(ks, terms: int) -> ZetaApprox:
    """Nested-series value over tuples m_1 > ... > m_n with m_1 <= terms."""
    ks = tuple(int(k) for k in ks)
    if not ks or ks[0] < 2 or any(k < 1 for k in ks):
        raise ValueError(f"inadmissible composition {ks}")
    if terms < len(ks):
        raise ValueError(f"need at least depth={len(ks)} terms")
    m = np.arange(1, terms + 1, dtype=np.float64)
    s = m ** float(-ks[-1])
    for k in reversed(ks[:-1]):
        prefix = np.empty_like(s)
        prefix[0] = 0.0
        np.cumsum(s[:-1], out=prefix[1:])
        s = m ** float(-k) * prefix
    return ZetaApprox(float(s.sum()), terms, tail_bound(ks, terms))


def zeta_of_word(w: Word, terms: int) -> ZetaApprox:
    """Evaluation of an admissible word; the empty word maps to 1."""
    if w.length == 0:
        return ZetaApprox(1.0, terms, 0.0)
    return zeta_numeric(w.composition(), terms)


def residual_with_bound(p: Poly, terms: int) -> tuple[float, float]:
    """Signed numeric image of p and the accumulated truncation bound."""
    total = 0.0
    bound = 0.0
    for w, c in p.sorted_terms():
        if not w.is_admissible():
            raise ValueError(f"monomial {w} is not admissible")
        z = zeta_of_word(w, terms)
        total += float(c) * z.value
        bound += abs(float(c)) * z.tail_bound
    return total, bound


def residual(p: Poly, terms: int) -> float:
    """Numeric image of an element expected to lie in the kernel."""
    return residual_with_bound(p, terms)[0]
