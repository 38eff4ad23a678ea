import math

import pytest

from mzv.numeric import (ZetaApprox, residual, residual_with_bound,
                         tail_bound, zeta_numeric, zeta_of_word)
from mzv.operators import duality, partial
from mzv.poly import Poly
from mzv.relations import derivation_all, duality_all
from mzv.words import EMPTY_WORD, word_from_letters

from oracles import zeta_brute, zeta_depth1_direct


def P(s: str) -> Poly:
    return Poly.from_word(word_from_letters(s))


def test_matches_brute_force_at_small_truncation():
    # identical truncation semantics: leading index up to the limit
    for ks in [(2,), (3,), (2, 1), (3, 2), (2, 1, 1), (2, 2, 1), (4, 1, 2)]:
        for limit in (10, 37, 60):
            expected = zeta_brute(ks, limit)
            got = zeta_numeric(ks, limit).value
            assert got == pytest.approx(expected, rel=1e-13), (ks, limit)


def test_zeta2_within_tail_bound_of_pi2_over_6():
    z = zeta_numeric((2,), 10**6)
    assert abs(z.value - math.pi**2 / 6) <= z.tail_bound
    assert z.tail_bound <= 2e-6
    assert z.terms_used == 10**6


def test_depth1_against_direct_summation():
    for k in (3, 4, 7):
        z = zeta_numeric((k,), 10**6)
        direct = zeta_depth1_direct(k, 10**6)
        assert abs(z.value - direct) <= 1e-12 * abs(direct)


def test_depth1_equals_plain_sum_shape():
    z = zeta_numeric((5,), 2000)
    assert z.value == pytest.approx(sum(1.0 / m**5 for m in range(1, 2001)),
                                    rel=1e-14)


def test_euler_identity_residual():
    M = 10**6
    z3 = zeta_numeric((3,), M)
    z21 = zeta_numeric((2, 1), M)
    assert abs(z3.value - z21.value) < 1e-4
    r = residual(partial(1, P("xy")), M)
    assert abs(r) < 1e-4


def test_residual_of_zero_poly():
    assert residual(Poly.zero(), 1000) == 0.0


def test_unit_word_evaluates_to_one():
    z = zeta_of_word(EMPTY_WORD, 100)
    assert z.value == 1.0 and z.tail_bound == 0.0


def test_monotone_in_truncation():
    values = [zeta_numeric((2, 1), M).value for M in (10**3, 10**4, 10**5)]
    assert values[0] <= values[1] <= values[2]
    singles = [zeta_numeric((2,), M).value for M in (10, 100, 1000)]
    assert singles == sorted(singles)


def test_input_validation():
    with pytest.raises(ValueError):
        zeta_numeric((1, 2), 100)  # divergent leading index
    with pytest.raises(ValueError):
        zeta_numeric((), 100)
    with pytest.raises(ValueError):
        zeta_numeric((2, 0), 100)
    with pytest.raises(ValueError):
        zeta_numeric((2, 1, 1), 2)  # fewer terms than depth
    with pytest.raises(ValueError):
        residual(P("yx"), 100)  # inadmissible monomial


def test_tail_bound_decreases_and_covers():
    ks = (2, 1, 1)
    bounds = [tail_bound(ks, M) for M in (10**3, 10**4, 10**5)]
    assert bounds == sorted(bounds, reverse=True)
    # the bound really covers the truncation gap (measured against a
    # much larger truncation)
    far = zeta_numeric(ks, 3 * 10**6).value
    for M in (10**3, 10**4, 10**5):
        z = zeta_numeric(ks, M)
        assert abs(far - z.value) <= z.tail_bound


def test_duality_residual_within_tail_bounds():
    M = 10**4
    value, bound = residual_with_bound(duality(P("xxxy")), M)
    assert abs(value) <= bound
    value, bound = residual_with_bound(duality(P("xyyyyy")), M)
    assert abs(value) <= bound


def test_relations_numerically_annihilate_at_modest_truncation():
    # module invariant at a cheap truncation; acceptance reruns at 1e6
    M = 10**4
    for k in range(3, 7):
        for rel in duality_all(k) + derivation_all(k):
            value, bound = residual_with_bound(rel, M)
            assert abs(value) <= bound, (k, rel)


def test_zeta_approx_is_frozen_dataclass():
    z = ZetaApprox(1.0, 10, 0.5)
    with pytest.raises(Exception):
        z.value = 2.0
