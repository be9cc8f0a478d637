"""Syzygy gap of (x^d1, y^d2, (x+y)^d3) in F_p[x, y].

Two independent routes: ``gap_oracle`` reads the syzygy degrees off the
Hilbert series of S/I (ranks over F_p), ``delta_star_han`` evaluates the
closed form via the closest odd-sum lattice point in exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from .fp_linalg import FpMatrix, PrimeModulus, as_modulus, rank
from .graded_algebra import WlpVerdict

INT64_MAX = 2**63 - 1


class DegenerateTriple(ValueError):
    """The three forms do not minimally generate their ideal."""


@dataclass(frozen=True)
class GapCertificate:
    degrees: tuple[int, int, int]
    p: int
    syzygy_degrees: tuple[int, int]
    delta: int

    @property
    def alpha(self) -> int:
        return self.syzygy_degrees[0]

    @property
    def beta(self) -> int:
        return self.syzygy_degrees[1]


@dataclass(frozen=True)
class HanCertificate:
    """Witness for delta* = p^{-s} (1 - m).

    With ``q = p**-s`` the distance ``m`` is ``m_numerator / q``, and
    ``delta_star == q - m_numerator``.  ``s``, ``u`` and ``m_numerator``
    are ``None`` when no admissible pair exists (then ``delta_star == 0``).
    """

    v: tuple[int, int, int]
    p: int
    s: Optional[int]
    u: Optional[tuple[int, int, int]]
    m_numerator: Optional[int]
    delta_star: int

    @property
    def m(self) -> Optional[Fraction]:
        if self.s is None:
            return None
        return Fraction(self.m_numerator, self.p ** -self.s)


def taxicab(v: Sequence, w: Sequence) -> Fraction:
    """Exact L1 distance between two triples of rationals."""
    return sum((abs(Fraction(a) - Fraction(b)) for a, b in zip(v, w, strict=True)),
               Fraction(0))


def is_in_L_odd(u: Sequence[int]) -> bool:
    return sum(u) % 2 == 1


def _check_positive(*vals: int) -> None:
    for x in vals:
        if isinstance(x, bool) or not isinstance(x, int) or x < 1:
            raise ValueError(f"expected positive integers, got {vals}")


def _binomial_form(d: int, p: int) -> list[int]:
    # coefficients of (x+y)^d in the basis x^d, x^{d-1}y, ..., y^d
    return [comb(d, i) % p for i in range(d + 1)]


def _ideal_dimension(m: int, gens: Sequence[list[int]], p: int) -> int:
    """dim_F_p of I_m, where each generator is a coefficient list in
    x^{e}, x^{e-1}y, ..., y^{e} (e = its degree)."""
    cols: list[list[int]] = []
    for g in gens:
        e = len(g) - 1
        if e > m:
            continue
        for shift in range(m - e + 1):
            # multiply g by x^{m-e-shift} y^{shift}
            col = [0] * (m + 1)
            col[shift:shift + e + 1] = g
            cols.append(col)
    if not cols:
        return 0
    # rows index the monomial basis of S_m, columns the spanning products
    rows = [[col[i] for col in cols] for i in range(m + 1)]
    return rank(FpMatrix.from_rows(rows, p))


def quotient_hilbert(d1: int, d2: int, d3: int, p: int | PrimeModulus) -> list[int]:
    """h_{S/I}(0), h_{S/I}(1), ... up to the last nonzero value."""
    _check_positive(d1, d2, d3)
    mod = as_modulus(p)
    gens = [
        [1] + [0] * d1,
        [0] * d2 + [1],
        _binomial_form(d3, mod.p),
    ]
    h: list[int] = []
    m = 0
    while True:
        h.append(m + 1 - _ideal_dimension(m, gens, mod.p))
        if h[-1] == 0:
            break
        m += 1
    # Artinian cutoff guard
    for extra in (m + 1, m + 2):
        if extra + 1 - _ideal_dimension(extra, gens, mod.p) != 0:
            raise RuntimeError(f"Hilbert function revived at degree {extra}")
    h.pop()
    return h


def gap_oracle(d1: int, d2: int, d3: int, p: int | PrimeModulus,
               minimal_only: bool = True) -> GapCertificate:
    """Syzygy degrees from the Hilbert series of S/I.

    The syzygy module of the three forms is free of rank two, so
    (1-t)^2 H(t) = 1 - t^d1 - t^d2 - t^d3 + t^alpha + t^beta.  When a form
    is redundant one syzygy sits in degree <= max(d_i) and the resolution
    is not minimal; that raises :class:`DegenerateTriple` unless
    ``minimal_only`` is false, in which case the gap of the (non-minimal)
    resolution is returned.
    """
    mod = as_modulus(p)
    h = quotient_hilbert(d1, d2, d3, mod)
    size = len(h) + 2
    num = [0] * size
    for m, hm in enumerate(h):
        num[m] += hm
        num[m + 1] -= 2 * hm
        num[m + 2] += hm
    tail: dict[int, int] = {}
    for e, c in enumerate(num):
        if c:
            tail[e] = c
    tail[0] = tail.get(0, 0) - 1
    for e in (d1, d2, d3):
        tail[e] = tail.get(e, 0) + 1
    terms = {e: c for e, c in tail.items() if c}
    degs: list[int] = []
    for e, c in sorted(terms.items()):
        if c < 0:
            raise DegenerateTriple(f"negative coefficient {c} at t^{e}")
        degs.extend([e] * c)
    if len(degs) != 2:
        raise DegenerateTriple(f"syzygy part has {len(degs)} generators, expected 2")
    alpha, beta = degs
    if minimal_only and alpha <= max(d1, d2, d3):
        # a syzygy in degree <= max(d_i) means some generator is redundant
        raise DegenerateTriple(
            f"({d1}, {d2}, {d3}) not minimally generated in characteristic {mod.p}")
    return GapCertificate((d1, d2, d3), mod.p, (alpha, beta), beta - alpha)


def _search_depth(total: int, p: int) -> int:
    # smallest n with p**n >= total, plus one
    n, q = 0, 1
    while q < total:
        q *= p
        n += 1
    return n + 1


def delta_star_han(v1: int, v2: int, v3: int, p: int | PrimeModulus) -> HanCertificate:
    """Han's delta* for a sorted integer triple with v3 < v1 + v2.

    Scans q = p**n for n descending, so the first hit has minimal s = -n.
    Positive s never needs checking: p**s * v is then an integer triple,
    its distance to L_odd is an integer, and distance 0 would already hold
    at s = 0.  Below q > v1+v2+v3 no odd-sum point is within distance 1.
    """
    _check_positive(v1, v2, v3)
    if not v1 <= v2 <= v3:
        raise ValueError(f"triple must be sorted, got ({v1}, {v2}, {v3})")
    if v3 >= v1 + v2:
        raise ValueError(f"triangle hypothesis fails: {v3} >= {v1} + {v2}")
    mod = as_modulus(p)
    p = mod.p
    v = (v1, v2, v3)
    n_max = _search_depth(v1 + v2 + v3, p)
    if p**n_max * max(v) > INT64_MAX:
        raise OverflowError(f"search depth {n_max} overflows 64-bit range")

    for n in range(n_max, -1, -1):
        q = p**n
        best: Optional[tuple[int, tuple[int, int, int]]] = None
        choices = [[u for u in (x // q - 1, x // q, x // q + 1) if u >= 0] for x in v]
        for a in choices[0]:
            for b in choices[1]:
                for c in choices[2]:
                    if (a + b + c) % 2 == 0:
                        continue
                    dist = abs(v1 - q * a) + abs(v2 - q * b) + abs(v3 - q * c)
                    if dist < q and (best is None or (dist, (a, b, c)) < best):
                        best = (dist, (a, b, c))
        if best is not None:
            dist, u = best
            return HanCertificate(v, p, -n, u, dist, q - dist)
    return HanCertificate(v, p, None, None, None, 0)


def diagonal_condition_scan(d: int, p: int | PrimeModulus) -> Optional[tuple[int, int]]:
    """Largest n >= 0 (with its smallest k >= 0) such that
    3d - 4 p^n < 6 k p^n < 3d - 2 p^n, or None."""
    _check_positive(d)
    p = as_modulus(p).p
    found = None
    n, q = 0, 1
    while 2 * q < 3 * d:
        k = _smallest_k(3 * d - 4 * q, 3 * d - 2 * q, q)
        if k is not None:
            found = (n, k)
        n += 1
        q *= p
    return found


def _smallest_k(low: int, high: int, q: int) -> Optional[int]:
    """Smallest k >= 0 with low < 6kq < high."""
    step = 6 * q
    k = 0 if low < 0 else low // step + 1
    return k if step * k < high else None


def wlp_han(d: int, p: int | PrimeModulus) -> WlpVerdict:
    """WLP decided as delta*(d, d, d) <= 1; the witness is the certificate."""
    cert = delta_star_han(d, d, d, p)
    return WlpVerdict(cert.delta_star <= 1, cert)
