"""Integer criterion for WLP of F_p[X,Y,Z]/(X^d,Y^d,Z^d).

A failure is witnessed by n >= 1 and k >= 0 with, for even d,

    3d/(6k+2) > p^n > 3d/(6k+4)

and for odd d

    (3d-1)/(6k+2) > p^n > (3d+1)/(6k+4).

Denominators are cleared, so every comparison is exact integer arithmetic.
"""

from __future__ import annotations

from typing import Optional

from .fp_linalg import PrimeModulus, as_modulus, is_prime
from .graded_algebra import ClosedForm, CriterionPair, WlpVerdict, _check_d


def criterion_bounds(d: int, q: int) -> tuple[int, int]:
    """Open interval ``(low, high)`` that ``6*k*q`` must fall in for ``q = p**n``."""
    if d % 2 == 0:
        return 3 * d - 4 * q, 3 * d - 2 * q
    return 3 * d + 1 - 4 * q, 3 * d - 1 - 2 * q


def smallest_k(d: int, q: int) -> Optional[int]:
    low, high = criterion_bounds(d, q)
    step = 6 * q
    k = 0 if low < 0 else low // step + 1
    return k if step * k < high else None


def criterion_witness(d: int, p: int) -> Optional[CriterionPair]:
    """Witness with smallest n (then smallest k), or None."""
    part = "even" if d % 2 == 0 else "odd"
    n, q = 1, p
    while 2 * q < 3 * d:
        k = smallest_k(d, q)
        if k is not None:
            return CriterionPair(part, n, k)
        n += 1
        q *= p
    return None


def decide_wlp_criterion(d: int, p: int | PrimeModulus) -> WlpVerdict:
    _check_d(d)
    p = as_modulus(p).p
    if 2 * p > 3 * d:
        return WlpVerdict(True, None)
    w = criterion_witness(d, p)
    return WlpVerdict(w is None, w)


def exceptional_primes(d: int) -> list[int]:
    """Primes in which WLP fails; all of them are at most 3d/2."""
    _check_d(d)
    return [p for p in range(2, 3 * d // 2 + 1)
            if is_prime(p) and not decide_wlp_criterion(d, p).holds]


def _power_of_two_exponent(x: int) -> Optional[int]:
    if x > 0 and x & (x - 1) == 0:
        return x.bit_length() - 1
    return None


def wlp_char2(d: int) -> WlpVerdict:
    """Characteristic 2: WLP holds iff d = floor((2^t + 1)/3) for some t >= 1,
    i.e. iff 3d - 1 or 3d + 1 is a power of two."""
    _check_d(d)
    for offset, sign in ((-1, "-"), (1, "+")):
        e = _power_of_two_exponent(3 * d + offset)
        if e is not None:
            return WlpVerdict(True, ClosedForm(f"3d{sign}1=2^{e}"))
    return WlpVerdict(False, None)


def char2_degrees(t_max: int) -> list[int]:
    """Sorted distinct values floor((2^t + 1)/3) for 1 <= t <= t_max."""
    return sorted({(2**t + 1) // 3 for t in range(1, t_max + 1)})


def divisor_obstruction(d: int, p: int | PrimeModulus) -> bool:
    """True when d is odd and p divides d; WLP then fails in characteristic p."""
    _check_d(d)
    p = as_modulus(p).p
    return d % 2 == 1 and d % p == 0
