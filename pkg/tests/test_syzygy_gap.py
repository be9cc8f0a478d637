from fractions import Fraction
from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from monowlp.fp_linalg import primes_up_to
from monowlp.graded_algebra import wlp_bruteforce
from monowlp.syzygy_gap import (
    DegenerateTriple,
    delta_star_han,
    diagonal_condition_scan,
    gap_oracle,
    is_in_L_odd,
    quotient_hilbert,
    taxicab,
)

GAP_PRIMES = [2, 3, 5, 7, 11, 13]


def triangle_triples(limit):
    for a in range(1, limit + 1):
        for b in range(a, limit + 1):
            for c in range(b, min(a + b, limit + 1)):
                yield a, b, c


def test_taxicab():
    assert taxicab((1, 2, 3), (1, 2, 3)) == 0
    assert taxicab((0, 0, 0), (1, 1, 1)) == 3
    third = Fraction(5, 3)
    assert taxicab((third,) * 3, (1, 1, 1)) == 2


@pytest.mark.parametrize("u,expected", [((1, 1, 1), True), ((1, 0, 0), True),
                                        ((1, 1, 0), False), ((0, 0, 0), False),
                                        ((-3, 2, 2), True)])
def test_L_odd_examples(u, expected):
    assert is_in_L_odd(u) is expected


@given(st.tuples(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50)))
def test_L_odd_characterization(u):
    odd = sum(x % 2 for x in u)
    assert is_in_L_odd(u) == (odd in (1, 3))


def brute_quotient_hilbert(d1, d2, d3, p, m):
    """dim (S/I)_m by Gaussian elimination on explicit vectors, no shared code."""
    vecs = []
    for deg, coeffs in ((d1, {d1: 1}), (d2, {0: 1}),
                        (d3, {i: comb(d3, i) for i in range(d3 + 1)})):
        # key = exponent of x; monomial x^i y^{deg-i}
        for shift in range(m - deg + 1):
            v = [0] * (m + 1)
            for i, c in coeffs.items():
                v[i + shift] = c % p
            vecs.append(v)
    r = 0
    rows = [v[:] for v in vecs]
    for col in range(m + 1):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], -1, p)
        for i in range(len(rows)):
            if i != r and rows[i][col] % p:
                f = rows[i][col] * inv
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        r += 1
    return m + 1 - r


@pytest.mark.parametrize("triple", [(2, 3, 4), (5, 5, 5), (3, 4, 6), (1, 2, 2)])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_quotient_hilbert_against_brute(triple, p):
    h = quotient_hilbert(*triple, p)
    for m in range(len(h) + 3):
        expected = h[m] if m < len(h) else 0
        assert brute_quotient_hilbert(*triple, p, m) == expected


def test_gap_oracle_examples():
    with pytest.raises(DegenerateTriple):
        gap_oracle(1, 1, 1, 5)
    with pytest.raises(DegenerateTriple):
        gap_oracle(2, 2, 2, 2)
    assert gap_oracle(5, 5, 5, 7).delta == 1
    c = gap_oracle(2, 2, 2, 3)
    assert c.syzygy_degrees == (3, 3) and c.delta == 0


def test_redundant_generator_gap():
    # (x+y)^3 = x^3 + y^3 in characteristic 3
    with pytest.raises(DegenerateTriple):
        gap_oracle(3, 3, 3, 3)
    c = gap_oracle(3, 3, 3, 3, minimal_only=False)
    assert c.syzygy_degrees == (3, 6) and c.delta == 3
    assert delta_star_han(3, 3, 3, 3).delta_star == 3


def test_oracle_accepts_unsorted_and_non_triangle():
    c = gap_oracle(4, 3, 3, 5)
    assert c.delta == gap_oracle(3, 3, 4, 5).delta
    assert sum(c.syzygy_degrees) == 10
    # x^4 lies in (y^2, (x+y)^3), a complete intersection with socle degree 3
    with pytest.raises(DegenerateTriple):
        gap_oracle(4, 2, 3, 5)
    # x^2, y^2 generate everything in degree >= 3, so (x+y)^5 is redundant
    with pytest.raises(DegenerateTriple):
        gap_oracle(2, 2, 5, 7)


def test_han_examples():
    c = delta_star_han(1, 1, 1, 11)
    assert (c.s, c.u, c.m_numerator, c.delta_star) == (0, (1, 1, 1), 0, 1)
    c = delta_star_han(3, 3, 3, 3)
    assert (c.s, c.u, c.delta_star) == (-1, (1, 1, 1), 3)
    c = delta_star_han(5, 5, 5, 7)
    assert c.s == -1 and c.delta_star == 1


@pytest.mark.parametrize("bad", [(2, 1, 1), (1, 2, 3), (1, 1, 2), (0, 1, 1)])
def test_han_rejects(bad):
    with pytest.raises(ValueError):
        delta_star_han(*bad, 3)


def test_han_overflow_guard():
    with pytest.raises(OverflowError):
        delta_star_han(2**61, 2**61, 2**61, 3)


def han_by_fractions(v, p, depth=12):
    """Literal reading of the formula over an explicit range of s, in rationals."""
    for s in range(-depth, 3):
        scale = Fraction(p) ** s
        point = [scale * x for x in v]
        ranges = [range(int(x) - 2, int(x) + 3) for x in point]
        hits = [taxicab(point, u) for u in product(*ranges) if is_in_L_odd(u)]
        hits = [m for m in hits if m < 1]
        if hits:
            return Fraction(p) ** -s * (1 - min(hits))
    return Fraction(0)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_han_matches_rational_formula(p):
    for v in triangle_triples(9):
        c = delta_star_han(*v, p)
        assert han_by_fractions(v, p) == c.delta_star


@pytest.mark.parametrize("p", GAP_PRIMES)
def test_han_certificate_invariants(p):
    for v in triangle_triples(16):
        c = delta_star_han(*v, p)
        if c.delta_star == 0:
            assert c.s is None
            continue
        q = p ** -c.s
        assert is_in_L_odd(c.u)
        assert c.m_numerator == sum(abs(x - q * u) for x, u in zip(v, c.u))
        assert c.m_numerator < q
        assert c.delta_star == q - c.m_numerator
        # exact rational form of the identity
        assert Fraction(q) * (1 - c.m) == c.delta_star
        assert c.m == taxicab([Fraction(x, q) for x in v], c.u)
        # no deeper level admits a point within distance 1
        for n in range(-c.s + 1, -c.s + 4):
            qq = p**n
            for u in product(*[range(x // qq - 1, x // qq + 2) for x in v]):
                if is_in_L_odd(u):
                    assert sum(abs(x - qq * a) for x, a in zip(v, u)) >= qq


def test_parity_and_sum_on_oracle_domain():
    for p in (2, 3, 5):
        for v in triangle_triples(10):
            try:
                c = gap_oracle(*v, p)
            except DegenerateTriple:
                continue
            assert c.alpha + c.beta == sum(v)
            assert c.delta == c.beta - c.alpha >= 0
            assert c.delta % 2 == sum(v) % 2
            assert max(v) < c.alpha


def test_non_minimal_resolution_still_matches_han():
    for p in (2, 3, 5, 7):
        for v in triangle_triples(12):
            assert gap_oracle(*v, p, minimal_only=False).delta == \
                delta_star_han(*v, p).delta_star


def test_diagonal_scan_examples():
    assert diagonal_condition_scan(4, 5) == (1, 0)
    assert diagonal_condition_scan(2, 3) is None
    assert diagonal_condition_scan(5, 5) == (1, 0)


def test_diagonal_scan_odd_d_always_found():
    for d in range(1, 200, 2):
        for p in (2, 3, 97):
            assert diagonal_condition_scan(d, p) is not None


def test_diagonal_scan_pair_is_valid():
    for d in range(1, 80):
        for p in primes_up_to(50):
            found = diagonal_condition_scan(d, p)
            if found is None:
                continue
            n, k = found
            q = Fraction(p) ** n
            assert Fraction(3 * d, 6 * k + 2) > q > Fraction(3 * d, 6 * k + 4)


@pytest.mark.parametrize("d", range(1, 13))
def test_diagonal_han_matches_bruteforce(d):
    for p in primes_up_to(41):
        assert (delta_star_han(d, d, d, p).delta_star <= 1) == wlp_bruteforce(d, p).holds
