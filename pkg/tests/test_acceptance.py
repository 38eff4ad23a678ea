"""Acceptance suite: one test per criterion, at the stated tolerances.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one
ACCEPTANCE line per criterion.  Criterion 8 is asserted exactly as
stated (|residual| <= 1e-4 at M = 10^6 for every weight <= 6 duality
and derivation relation); the nested partial sums it prescribes
converge too slowly for the depth-heavy relations, so that criterion
fails honestly rather than being loosened -- see the README.
"""

import random
import time
from fractions import Fraction

from mzv.linalg import RelationMatrix
from mzv.numeric import zeta_of_word
from mzv.operators import (UPoly, delta_u, delta_u_inv, partial, tau, theta)
from mzv.poly import Poly
from mzv.relations import derivation_all, duality_all
from mzv.verify import (build_table, check_corollary, conjecture_scan,
                        verify_theorem_i, verify_theorem_ii)
from mzv.words import Word, all_words

from oracles import self_dual_count

# published golden table, rows 1..7 per weight
GOLDEN = {
    3: (1, 1, 1, 1, 1, 1, 1),
    4: (1, 1, 1, 1, 2, 2, 1),
    5: (3, 4, 4, 4, 5, 5, 4),
    6: (3, 6, 6, 6, 10, 10, 6),
    7: (6, 11, 12, 16, 22, 23, 15),
    8: (6, 15, 16, 28, 44, 46, 26),
    9: (10, 22, 25, 64, 90, 98, 56),
    10: (10, 28, 31, 120, 181, 199, 102),
    11: (15, 37, 43, 256, 363, 411, 208),
    12: (15, 45, 51, 496, 727, 830, 393),
}
GOLDEN_13_ROWS_4_TO_7 = (1024, 1456, 1691, 789)


def announce(num, desc, ok, elapsed, detail=""):
    status = "PASS" if ok else "FAIL"
    line = f"ACCEPTANCE {num} ({desc}): {status} [{elapsed:.1f} s]"
    if detail:
        line += f" -- {detail}"
    print(line, flush=True)


def random_poly(rng, max_weight, nterms):
    out = Poly.zero()
    for _ in range(nterms):
        k = rng.randint(0, max_weight)
        out = out + Poly.from_word(Word(k, rng.getrandbits(k) if k else 0),
                                   rng.choice([1, -1, 2, Fraction(1, 2)]))
    return out


def test_criterion_1_table_weights_3_to_10():
    t0 = time.perf_counter()
    report = build_table(10, cell_budget=None)
    mismatches = []
    for wt in range(3, 11):
        got = tuple(report.cell(row, wt) for row in range(1, 8))
        if got != GOLDEN[wt]:
            mismatches.append((wt, got, GOLDEN[wt]))
    elapsed = time.perf_counter() - t0
    announce(1, "table weights 3-10, exact cell-for-cell", not mismatches,
             elapsed, f"expected under 120 s, took {elapsed:.1f} s")
    assert not mismatches, mismatches
    assert report.consistency_violations() == []


def test_criterion_2_table_weights_11_12():
    t0 = time.perf_counter()
    mismatches = []
    for wt in (11, 12):
        from mzv.verify import table_column
        col = table_column(wt, cell_budget=None)
        got = tuple(col[row] for row in range(1, 8))
        if got != GOLDEN[wt]:
            mismatches.append((wt, got, GOLDEN[wt]))
    elapsed = time.perf_counter() - t0
    announce(2, "extended table weights 11-12", not mismatches, elapsed,
             f"30-minute budget, took {elapsed:.1f} s")
    assert not mismatches, mismatches


def test_criterion_2_optional_weight_13():
    t0 = time.perf_counter()
    from mzv.verify import table_column
    col = table_column(13, cell_budget=None)
    got = tuple(col[row] for row in range(4, 8))
    ok = got == GOLDEN_13_ROWS_4_TO_7
    announce("2b", "optional weight-13 rows 4-7", ok,
             time.perf_counter() - t0)
    assert ok, (got, GOLDEN_13_ROWS_4_TO_7)


def test_criterion_3_theorem_identities():
    t0 = time.perf_counter()
    bad = []
    for m in range(1, 6):
        rep = verify_theorem_i(m, 12)
        if not rep.verdict:
            bad.append(("i", m, rep.residual))
    for n in range(1, 6):
        rep = verify_theorem_ii(n, 12)
        if not rep.verdict:
            bad.append(("ii", n, rep.residual))
    elapsed = time.perf_counter() - t0
    announce(3, "identities (i) m=1..5 and (ii) n=1..5 at cutoff 12",
             not bad, elapsed, f"expected under 300 s, took {elapsed:.1f} s")
    assert not bad, bad


def test_criterion_4_corollary_memberships():
    t0 = time.perf_counter()
    bad = []
    for s in range(1, 8):
        for t in range(0, 9 - s):
            if not check_corollary("i", s, t).verdict:
                bad.append(("i", s, t))
    for s in range(2, 11):
        for t in range(1, s):
            if not check_corollary("ii", s, t).verdict:
                bad.append(("ii", s, t))
    elapsed = time.perf_counter() - t0
    announce(4, "corollary (i) weights <= 10, (ii) s <= 10", not bad,
             elapsed, f"expected under 300 s, took {elapsed:.1f} s")
    assert not bad, bad


def test_criterion_5_conjecture_scan():
    t0 = time.perf_counter()
    reports, skipped = conjecture_scan(11)
    failures = [r.params for r in reports if not r.verdict]
    ok = not failures and not skipped
    elapsed = time.perf_counter() - t0
    announce(5, "class-sum membership scan to weight 11", ok, elapsed,
             f"{len(reports)} nonzero class sums")
    assert ok, (failures, skipped)
    # optional extension: weight 12, inside the 30-minute budget
    t0 = time.perf_counter()
    reports12, skipped12 = conjecture_scan(12, cell_budget=1800)
    failures12 = [r.params for r in reports12 if not r.verdict]
    announce("5b", "optional scan extension to weight 12",
             not failures12 and not skipped12, time.perf_counter() - t0)
    assert not failures12, failures12
    assert not skipped12, skipped12


def test_criterion_6_operator_properties():
    t0 = time.perf_counter()
    rng = random.Random(20250810)

    # tau is an involution: 1000 random polynomials up to weight 14
    for _ in range(1000):
        p = random_poly(rng, 14, 4)
        assert tau(tau(p)) == p

    # tau is an anti-automorphism: 500 random word pairs
    for _ in range(500):
        ka, kb = rng.randint(0, 7), rng.randint(0, 7)
        a = Poly.from_word(Word(ka, rng.getrandbits(ka) if ka else 0))
        b = Poly.from_word(Word(kb, rng.getrandbits(kb) if kb else 0))
        assert tau(a * b) == tau(b) * tau(a)

    # Leibniz rule, exhaustive on products of total weight <= 5, n <= 4
    words5 = [w for k in range(0, 6) for w in all_words(k)]
    for n in range(1, 5):
        for v in words5:
            for w in words5:
                if v.length + w.length > 5:
                    continue
                pv, pw = Poly.from_word(v), Poly.from_word(w)
                assert partial(n, pv * pw) == \
                    partial(n, pv) * pw + pv * partial(n, pw)

    # derivations commute, exhaustive on words of weight <= 5, n, m <= 4
    for n in range(1, 5):
        for m in range(n + 1, 5):
            for w in words5:
                p = Poly.from_word(w)
                assert partial(n, partial(m, p)) == partial(m, partial(n, p))

    # image in the admissible span and degree shift +n, weight <= 6
    for n in range(1, 7):
        for k in range(0, 7):
            for w in all_words(k):
                img = partial(n, Poly.from_word(w))
                assert img.is_zero() or img.is_homogeneous(k + n)
                if w.is_admissible():
                    assert img.in_h0()

    # displayed formulas for theta_1..theta_3 on all words of weight <= 4
    half, sixth = Fraction(1, 2), Fraction(1, 6)
    for k in range(0, 5):
        for w in all_words(k):
            p = Poly.from_word(w)
            d1 = partial(1, p)
            assert theta(1, p) == d1
            assert theta(2, p) == (partial(2, p) + partial(1, d1)).scale(half)
            assert theta(3, p) == (partial(3, p).scale(2)
                                   + partial(2, d1).scale(3)
                                   + partial(1, partial(1, d1))).scale(sixth)

    # u^l coefficient of the substitution map equals theta_l,
    # weight <= 6, l <= 5, at cutoff 12
    for k in range(0, 7):
        for w in all_words(k):
            p = Poly.from_word(w)
            img = delta_u(p, 12)
            for l in range(0, 6):
                assert img.coeff(l) == theta(l, p), (w, l)

    # truncated two-sided inverse on words of weight <= 5 at cutoff 8
    cutoff = 8
    for k in range(0, 6):
        for w in all_words(k):
            p = Poly.from_word(w)
            for first, second in ((delta_u_inv, delta_u),
                                  (delta_u, delta_u_inv)):
                total: dict[int, Poly] = {}
                for u1, q in first(p, cutoff).coeffs.items():
                    for u2, r in second(q, cutoff).coeffs.items():
                        if u1 + u2 <= cutoff:
                            total[u1 + u2] = total.get(u1 + u2,
                                                       Poly.zero()) + r
                assert UPoly(total) == UPoly({0: p}), w

    elapsed = time.perf_counter() - t0
    announce(6, "operator property suite, exact", True, elapsed,
             f"expected under 120 s, took {elapsed:.1f} s")


def test_criterion_7_duality_rank_law():
    t0 = time.perf_counter()
    bad = []
    for k in range(3, 13):
        f_k = self_dual_count(k)
        expected = ((1 << (k - 2)) - f_k) // 2
        got = RelationMatrix.from_polys(k, duality_all(k)).rank()
        if got != expected:
            bad.append((k, got, expected))
    announce(7, "rank(duality) = (2^(k-2) - f_k)/2 for k = 3..12",
             not bad, time.perf_counter() - t0)
    assert not bad, bad


def test_criterion_8_numeric_kernel_sanity():
    t0 = time.perf_counter()
    M = 10**6
    cache = {}

    def zeta_cached(w):
        if w not in cache:
            cache[w] = zeta_of_word(w, M)
        return cache[w]

    over_tolerance = []
    for k in range(3, 7):
        for rel in duality_all(k) + derivation_all(k):
            value = 0.0
            bound = 0.0
            for w, c in rel.sorted_terms():
                z = zeta_cached(w)
                value += float(c) * z.value
                bound += abs(float(c)) * z.tail_bound
            assert abs(value) <= bound, (k, rel)  # rigorous coverage
            if abs(value) > 1e-4:
                over_tolerance.append((k, str(rel), value))
    elapsed = time.perf_counter() - t0
    worst = max((abs(v) for _, _, v in over_tolerance), default=0.0)
    announce(8, "numeric residuals <= 1e-4 at M = 10^6, weights 3-6",
             not over_tolerance, elapsed,
             f"{len(over_tolerance)} relations exceed 1e-4 "
             f"(worst {worst:.2e}); every residual sits within its "
             f"rigorous tail bound")
    assert not over_tolerance, (
        "The stated 1e-4 tolerance is unattainable for the prescribed "
        "truncated nested sums: depth-d tails shrink like "
        "(ln M)^(d-1)/M, which is above 1e-4 at M = 10^6 for the "
        "depth-3..5 relations listed here. Every residual does lie "
        "within its rigorous accumulated tail bound. "
        f"Offenders: {over_tolerance}")
