"""Executable form of the identity, membership and rank-table claims.

* ``verify_theorem_i`` / ``verify_theorem_ii`` build both sides of the
  two truncated series identities relating (1 - tau) images to the
  exponential of the derivations, and report the residual, which must
  vanish identically in every weight up to the cutoff.
* ``check_corollary`` tests exact span membership of specific duality
  elements in the derivation span of their weight.
* ``conjecture_scan`` sweeps all (m, n) class sums up to a weight and
  tests the same membership.
* ``build_table`` computes the seven-row table of relation-span ranks
  per weight, with budgeted cells marked skipped rather than guessed.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from time import monotonic

from .linalg import BudgetExceeded, RelationMatrix
from .operators import duality, theta
from .poly import Poly
from .relations import (derivation_all, duality_all, duality_ht_sum,
                        duality_k1_sum)
from .series import GradedSeries, geom, theta_minus_one
from .words import Word, basis

X = Word(1, 0)
Y = Word(1, 1)


def x_power(m: int) -> Word:
    return Word(m, 0)


def xm_y(m: int) -> Word:
    """The word x^m y."""
    return Word(m + 1, 1)


# -- cached spans ------------------------------------------------------

_FAMILY_CACHE: dict[tuple[str, int], RelationMatrix] = {}

_FAMILY_GENERATORS = {
    "duality": duality_all,
    "derivation": derivation_all,
    "duality-ht": duality_ht_sum,
    "duality-k1": duality_k1_sum,
}


def family_matrix(kind: str, k: int) -> RelationMatrix:
    """Relation matrix of one family at weight k, with its echelon cached."""
    key = (kind, k)
    if key not in _FAMILY_CACHE:
        _FAMILY_CACHE[key] = RelationMatrix.from_polys(
            k, _FAMILY_GENERATORS[kind](k))
    return _FAMILY_CACHE[key]


def derivation_matrix(k: int) -> RelationMatrix:
    return family_matrix("derivation", k)


# -- verdicts -----------------------------------------------------------


@dataclass
class VerdictReport:
    """Outcome of one claim check, with falsification evidence if any."""

    claim: str
    params: dict[str, int]
    cutoff: int | None
    verdict: bool
    residual: Poly | None = None
    elapsed_ms: float = 0.0

    def to_json(self) -> dict:
        residual_terms = []
        if self.residual is not None and not self.residual.is_zero():
            residual_terms = [{"word": str(w), "coeff": str(c)}
                              for w, c in self.residual.sorted_terms()]
        return {
            "claim": self.claim,
            "params": dict(self.params),
            "cutoff": self.cutoff,
            "verdict": self.verdict,
            "residual_terms": residual_terms,
            "elapsed_ms": self.elapsed_ms,
        }


def _series_theta_shift(l: int, s: GradedSeries) -> GradedSeries:
    """theta_l applied componentwise (weights rise by l, cutoff kept)."""
    parts = {}
    for i, p in s.parts.items():
        if i + l > s.cutoff:
            continue
        q = theta(l, p)
        if q:
            parts[i + l] = q
    return GradedSeries(s.cutoff, parts)


def _series_pow(s: GradedSeries, j: int) -> GradedSeries:
    out = GradedSeries.one(s.cutoff)
    for _ in range(j):
        out = out * s
    return out


def theorem_i_sides(m: int, cutoff: int) -> tuple[GradedSeries, GradedSeries]:
    """Both sides of the first identity, truncated at the cutoff."""
    gx = geom(Poly.from_word(X), cutoff)
    y_s = GradedSeries.from_word(Y, cutoff)
    one = GradedSeries.one(cutoff)
    xmy = GradedSeries.from_word(xm_y(m), cutoff)

    lhs = (xmy * gx * y_s).map_parts(duality)

    rhs = theta_minus_one(xmy * (one - gx * y_s))
    x_gy = GradedSeries.from_word(X, cutoff) * geom(Poly.from_word(Y), cutoff)
    xy_s = GradedSeries.from_word(xm_y(1), cutoff)
    for i in range(1, m):
        arg = (GradedSeries.from_word(xm_y(m - i), cutoff)
               + _series_pow(x_gy, m - i) * xy_s
               - _series_pow(x_gy, m - i - 1) * xy_s)
        rhs = rhs - _series_theta_shift(i, arg)
    return lhs, rhs


def theorem_ii_sides(n: int, cutoff: int) -> tuple[GradedSeries, GradedSeries]:
    """Both sides of the second identity, truncated at the cutoff."""
    gx = geom(Poly.from_word(X), cutoff)
    y_s = GradedSeries.from_word(Y, cutoff)
    one = GradedSeries.one(cutoff)

    lhs_inner = GradedSeries.from_word(xm_y(1), cutoff) \
        * _series_pow(gx * y_s, n - 1)
    lhs = lhs_inner.map_parts(duality)

    def finite_geom_x(count: int) -> GradedSeries:
        # 1 + x + ... + x^(count-1); zero series for count <= 0
        return GradedSeries.from_poly(
            Poly({x_power(i): 1 for i in range(max(count, 0))}), cutoff)

    def rhs_arg(l: int) -> GradedSeries:
        return (GradedSeries.from_word(X, cutoff) * finite_geom_x(n - l - 1)
                * y_s * (one - gx * y_s))

    rhs = theta_minus_one(rhs_arg(0))
    for l in range(1, n - 1):
        rhs = rhs - _series_theta_shift(l, rhs_arg(l))
    return lhs, rhs


def _residual_report(claim: str, params: dict[str, int], cutoff: int,
                     lhs: GradedSeries, rhs: GradedSeries,
                     start: float) -> VerdictReport:
    diff = lhs - rhs
    residual = Poly.zero()
    for _, p in sorted(diff.parts.items()):
        residual = residual + p
    return VerdictReport(claim, params, cutoff, residual.is_zero(),
                         residual, (monotonic() - start) * 1e3)


def verify_theorem_i(m: int, cutoff: int) -> VerdictReport:
    """Check the first identity for one m, exactly, up to the cutoff."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if cutoff < m + 2:
        raise ValueError(f"cutoff {cutoff} too small for m={m}")
    start = monotonic()
    lhs, rhs = theorem_i_sides(m, cutoff)
    return _residual_report("theorem-i", {"m": m}, cutoff, lhs, rhs, start)


def verify_theorem_ii(n: int, cutoff: int) -> VerdictReport:
    """Check the second identity for one n, exactly, up to the cutoff."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if cutoff < n + 1:
        raise ValueError(f"cutoff {cutoff} too small for n={n}")
    start = monotonic()
    lhs, rhs = theorem_ii_sides(n, cutoff)
    return _residual_report("theorem-ii", {"n": n}, cutoff, lhs, rhs, start)


def corollary_i_element(s: int, t: int) -> Poly:
    """(1 - tau) of the double-zeta word x^s y x^t y."""
    w = x_power(s).concat(Y).concat(x_power(t)).concat(Y)
    return duality(Poly.from_word(w))


def corollary_ii_element(s: int, t: int) -> Poly:
    """(1 - tau) of the class sum with leading exponent 2 and depth t."""
    total = Poly.zero()
    for w in basis(s):
        if w.k1() == 2 and w.depth == t:
            total = total + Poly.from_word(w)
    return duality(total)


def check_corollary(kind: str, s: int, t: int) -> VerdictReport:
    """Membership of a corollary element in the derivation span."""
    start = monotonic()
    if kind == "i":
        if s < 1 or t < 0:
            raise ValueError("need s >= 1 and t >= 0")
        weight = s + t + 2
        elem = corollary_i_element(s, t)
    elif kind == "ii":
        if not s > t >= 1:
            raise ValueError("need s > t >= 1")
        weight = s
        elem = corollary_ii_element(s, t)
    else:
        raise ValueError(f"unknown corollary part {kind!r}")
    # the zero element (self-dual input) needs no span at all
    verdict = elem.is_zero() or derivation_matrix(weight).in_span(elem)
    witness = None if verdict else elem
    return VerdictReport(f"corollary-{kind}", {"s": s, "t": t}, None,
                         verdict, witness, (monotonic() - start) * 1e3)


def conjecture_element(m: int, n: int, k: int) -> Poly:
    """Weight-k component of the conjectured family: (1 - tau) of the
    sum of weight-k depth-n words with leading exponent m."""
    total = Poly.zero()
    for w in basis(k):
        if w.depth == n and w.k1() == m:
            total = total + Poly.from_word(w)
    return duality(total)


def conjecture_scan(max_weight: int, cell_budget: float | None = None
                    ) -> tuple[list[VerdictReport], list[int]]:
    """All membership verdicts for m, n >= 3 up to max_weight.

    Returns the verdict list and the weights skipped over budget.
    Class sums whose duality image is zero are omitted (trivially in
    every span).
    """
    if max_weight < 6:
        raise ValueError(f"max weight must be >= 6, got {max_weight}")
    reports: list[VerdictReport] = []
    skipped: list[int] = []
    for k in range(5, max_weight + 1):
        deadline = monotonic() + cell_budget if cell_budget else None
        try:
            mat = derivation_matrix(k)
            mat.echelon(deadline)
            for m in range(3, k - 1):
                for n in range(3, k - m + 2):
                    elem = conjecture_element(m, n, k)
                    if elem.is_zero():
                        continue
                    start = monotonic()
                    verdict = mat.in_span(elem, deadline)
                    reports.append(VerdictReport(
                        "conjecture", {"m": m, "n": n, "weight": k}, None,
                        verdict, None if verdict else elem,
                        (monotonic() - start) * 1e3))
        except BudgetExceeded:
            skipped.append(k)
    return reports, skipped


# -- the rank table -----------------------------------------------------

ROW_LABELS = {
    1: "Duality (fixed wt, dep, ht)",
    2: "Duality (fixed wt, dep, k1)",
    3: "Union of 1 and 2",
    4: "Duality",
    5: "Derivation",
    6: "Union of 4 and 5 (Ohno)",
    7: "Intersection of 4 and 5",
}


@dataclass
class TableReport:
    """Ranks per weight and table row; None marks a skipped cell."""

    max_weight: int
    values: dict[int, dict[int, int | None]]
    elapsed_ms: float = 0.0

    def cell(self, row: int, weight: int) -> int | None:
        return self.values[weight][row]

    def skipped_cells(self) -> list[tuple[int, int]]:
        return [(row, wt) for wt, col in self.values.items()
                for row, v in col.items() if v is None]

    def consistency_violations(self) -> list[str]:
        """Internal inequalities that must hold between computed cells."""
        bad = []
        for wt, col in self.values.items():
            def chk(cond, msg):
                if not cond:
                    bad.append(f"wt {wt}: {msg}")
            r = {i: col[i] for i in range(1, 8)}
            if r[1] is not None and r[3] is not None:
                chk(r[1] <= r[3], "row1 > row3")
            if r[2] is not None and r[3] is not None:
                chk(r[2] <= r[3], "row2 > row3")
            if r[3] is not None and r[4] is not None:
                chk(r[3] <= r[4], "row3 > row4")
            if r[4] is not None and r[6] is not None:
                chk(r[4] <= r[6], "row4 > row6")
            if r[5] is not None and r[6] is not None:
                chk(r[5] <= r[6], "row5 > row6")
            if None not in (r[4], r[5], r[6], r[7]):
                chk(r[7] == r[4] + r[5] - r[6], "row7 != row4+row5-row6")
                chk(r[7] >= 0, "row7 < 0")
        return bad

    def to_json(self) -> dict:
        return {
            "max_weight": self.max_weight,
            "rows": [{
                "id": i,
                "label": ROW_LABELS[i],
                "values": {str(wt): self.values[wt][i]
                           for wt in sorted(self.values)},
            } for i in range(1, 8)],
            "elapsed_ms": self.elapsed_ms,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        weights = sorted(self.values)
        writer.writerow(["row"] + [str(wt) for wt in weights])
        for i in range(1, 8):
            writer.writerow([f"{i}. {ROW_LABELS[i]}"]
                            + ["" if self.values[wt][i] is None
                               else self.values[wt][i] for wt in weights])
        return buf.getvalue()

    def to_markdown(self) -> str:
        weights = sorted(self.values)
        head = "| wt | " + " | ".join(str(wt) for wt in weights) + " |"
        sep = "|----" * (len(weights) + 1) + "|"
        lines = [head, sep]
        for i in range(1, 8):
            cells = [" " if self.values[wt][i] is None
                     else str(self.values[wt][i]) for wt in weights]
            lines.append(f"| {i}. {ROW_LABELS[i]} | " + " | ".join(cells)
                         + " |")
        return "\n".join(lines)


def _budgeted(fn, cell_budget: float | None):
    deadline = monotonic() + cell_budget if cell_budget else None
    try:
        return fn(deadline)
    except BudgetExceeded:
        return None


def table_column(k: int, cell_budget: float | None = None
                 ) -> dict[int, int | None]:
    """All seven row values at one weight (None where over budget)."""
    ht = RelationMatrix.from_polys(k, duality_ht_sum(k))
    k1 = RelationMatrix.from_polys(k, duality_k1_sum(k))
    dual = RelationMatrix.from_polys(k, duality_all(k))
    der = RelationMatrix.from_polys(k, derivation_all(k))
    col: dict[int, int | None] = {}
    col[1] = _budgeted(ht.rank, cell_budget)
    col[2] = _budgeted(k1.rank, cell_budget)
    col[3] = _budgeted(lambda d: ht.rank_union(k1, d), cell_budget)
    col[4] = _budgeted(dual.rank, cell_budget)
    col[5] = _budgeted(der.rank, cell_budget)
    col[6] = _budgeted(lambda d: dual.rank_union(der, d), cell_budget)
    if None in (col[4], col[5], col[6]):
        col[7] = None
    else:
        col[7] = col[4] + col[5] - col[6]
    return col


def build_table(max_weight: int, cell_budget: float | None = None,
                threads: int = 1) -> TableReport:
    """Fill the seven-row table for weights 3..max_weight."""
    if max_weight < 3:
        raise ValueError(f"max weight must be >= 3, got {max_weight}")
    start = monotonic()
    weights = list(range(3, max_weight + 1))
    values: dict[int, dict[int, int | None]] = {}
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for wt, col in zip(weights, pool.map(
                    table_column, weights, [cell_budget] * len(weights))):
                values[wt] = col
    else:
        for wt in weights:
            values[wt] = table_column(wt, cell_budget)
    return TableReport(max_weight, values, (monotonic() - start) * 1e3)
