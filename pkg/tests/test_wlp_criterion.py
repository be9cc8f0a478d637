from fractions import Fraction

import pytest

from monowlp.fp_linalg import is_prime, primes_up_to
from monowlp.graded_algebra import ClosedForm, CriterionPair, WlpVerdict, wlp_bruteforce
from monowlp.wlp_criterion import (
    char2_degrees,
    criterion_bounds,
    decide_wlp_criterion,
    divisor_obstruction,
    exceptional_primes,
    wlp_char2,
)


def criterion_by_fractions(d, p):
    """Scan (n, k) with rational inequalities as written, n >= 1."""
    lo_num, hi_num = (3 * d, 3 * d) if d % 2 == 0 else (3 * d + 1, 3 * d - 1)
    n = 1
    while p**n < Fraction(3 * d, 2):
        k = 0
        while Fraction(hi_num, 6 * k + 2) > 0 and 6 * k + 2 <= hi_num:
            if Fraction(hi_num, 6 * k + 2) > p**n > Fraction(lo_num, 6 * k + 4):
                return False
            k += 1
        n += 1
    return True


def test_criterion_examples():
    v = decide_wlp_criterion(4, 5)
    assert not v.holds and (v.witness.n, v.witness.k) == (1, 0)
    assert decide_wlp_criterion(6, 3).holds
    v = decide_wlp_criterion(31, 11)
    assert not v.holds and v.witness == CriterionPair("odd", 1, 1)
    assert decide_wlp_criterion(5, 7).holds
    v = decide_wlp_criterion(20, 7)
    assert v.witness == CriterionPair("even", 1, 1)


def test_criterion_matches_rational_scan():
    for d in range(1, 150):
        for p in primes_up_to(3 * d // 2 + 2):
            assert decide_wlp_criterion(d, p).holds == criterion_by_fractions(d, p), (d, p)


def test_witnesses_verify_independently():
    for d in range(1, 300):
        for p in exceptional_primes(d):
            w = decide_wlp_criterion(d, p).witness
            q = Fraction(p) ** w.n
            if d % 2 == 0:
                assert Fraction(3 * d, 6 * w.k + 2) > q > Fraction(3 * d, 6 * w.k + 4)
            else:
                assert Fraction(3 * d - 1, 6 * w.k + 2) > q > Fraction(3 * d + 1, 6 * w.k + 4)
            assert w.verify(d, p)
            # smallest n, then smallest k
            for n in range(1, w.n + 1):
                for k in range(0, w.k if n == w.n else 3 * d):
                    assert not CriterionPair(w.part, n, k).verify(d, p)


def test_exceptional_primes_examples():
    assert exceptional_primes(8) == [2, 3, 7, 11]
    assert exceptional_primes(12) == [2, 11, 13, 17]
    assert exceptional_primes(1) == []
    assert exceptional_primes(14) == [2, 5, 11, 13, 17, 19]


def test_exceptional_primes_bounded():
    for d in range(1, 200):
        ps = exceptional_primes(d)
        assert ps == sorted(ps)
        assert all(is_prime(p) and 2 * p <= 3 * d for p in ps)


def test_n_zero_never_satisfies_odd_form():
    for d in range(1, 10**4, 2):
        low, high = criterion_bounds(d, 1)
        assert not any(low < 6 * k < high for k in range(d + 1))


def test_char2_examples():
    assert wlp_char2(3) == WlpVerdict(True, ClosedForm("3d-1=2^3"))
    assert wlp_char2(11).holds
    assert not wlp_char2(2).holds
    assert wlp_char2(1).holds


def test_char2_matches_criterion():
    for d in range(1, 2**12 + 1):
        assert wlp_char2(d).holds == decide_wlp_criterion(d, 2).holds


def test_char2_degrees():
    assert char2_degrees(5) == [1, 3, 5, 11]
    assert char2_degrees(1) == [1]
    assert char2_degrees(7) == [1, 3, 5, 11, 21, 43]


def test_divisor_obstruction_examples():
    assert divisor_obstruction(9, 3)
    assert divisor_obstruction(15, 5)
    assert not decide_wlp_criterion(15, 5).holds
    assert not divisor_obstruction(6, 3)
    assert decide_wlp_criterion(6, 3).holds


@pytest.mark.parametrize("d", range(1, 11))
def test_criterion_matches_bruteforce_small(d):
    for p in primes_up_to(23):
        assert decide_wlp_criterion(d, p).holds == wlp_bruteforce(d, p).holds


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        decide_wlp_criterion(0, 2)
    with pytest.raises(ValueError):
        decide_wlp_criterion(4, 6)
