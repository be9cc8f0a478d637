"""Graded pieces of A = F_p[X,Y,Z]/(X^d,Y^d,Z^d) and brute-force WLP.

Multiplication by X+Y+Z stands in for a general linear form: rescaling the
variables preserves the ideal and moves any form with nonzero coefficients
to X+Y+Z, so its ranks are the generic ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from .fp_linalg import FpMatrix, PrimeModulus, as_modulus, rank


@dataclass(frozen=True)
class CriterionPair:
    """Numerical witness ``(n, k)`` for failure of WLP.

    ``part`` is ``"even"`` or ``"odd"`` according to the parity of d, and
    selects which of the two double inequalities the pair satisfies.
    """

    part: str
    n: int
    k: int

    def verify(self, d: int, p: int) -> bool:
        q = p**self.n
        t = 6 * self.k * q
        if self.part == "even":
            return 3 * d - 4 * q < t < 3 * d - 2 * q
        return 3 * d + 1 - 4 * q < t < 3 * d - 1 - 2 * q


@dataclass(frozen=True)
class FailingDegree:
    m: int
    rank: int
    max_rank: int


@dataclass(frozen=True)
class ClosedForm:
    tag: str


@dataclass(frozen=True)
class WlpVerdict:
    """``witness`` is a CriterionPair, FailingDegree, ClosedForm, a Han
    certificate, or None, depending on the deciding route."""

    holds: bool
    witness: object = None


@dataclass(frozen=True)
class HilbertFunction:
    d: int
    dims: tuple[int, ...]

    @property
    def socle_degree(self) -> int:
        return 3 * self.d - 3

    def __getitem__(self, m: int) -> int:
        if 0 <= m < len(self.dims):
            return self.dims[m]
        return 0


@dataclass(frozen=True)
class MonomialBasis:
    d: int
    degree: int
    monomials: tuple[tuple[int, int, int], ...]

    def index(self) -> dict[tuple[int, int, int], int]:
        return {mono: i for i, mono in enumerate(self.monomials)}


def _check_d(d: int) -> None:
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise ValueError(f"d must be a positive integer, got {d!r}")


def hilbert_value(d: int, m: int) -> int:
    """Inclusion-exclusion count of exponent triples below d summing to m."""
    total = 0
    for j in range(4):
        top = m - j * d + 2
        if top >= 2:
            total += (-1) ** j * comb(3, j) * comb(top, 2)
    return total


def hilbert_function(d: int) -> HilbertFunction:
    _check_d(d)
    return HilbertFunction(d, tuple(hilbert_value(d, m) for m in range(3 * d - 2)))


@lru_cache(maxsize=256)
def monomial_basis(d: int, m: int) -> MonomialBasis:
    """Monomials of A_m as exponent triples in lexicographic order."""
    _check_d(d)
    monos = tuple(
        (i, j, m - i - j)
        for i in range(min(d - 1, m) + 1)
        for j in range(min(d - 1, m - i) + 1)
        if m - i - j <= d - 1
    )
    return MonomialBasis(d, m, monos)


def multiplication_matrix(d: int, p: int | PrimeModulus, m: int) -> FpMatrix:
    """Matrix of ``X+Y+Z: A_m -> A_{m+1}``; columns A_m, rows A_{m+1}."""
    _check_d(d)
    mod = as_modulus(p)
    if not 0 <= m <= 3 * d - 4:
        raise ValueError(f"degree m={m} outside [0, {3 * d - 4}]")
    src = monomial_basis(d, m).monomials
    dst = monomial_basis(d, m + 1)
    where = dst.index()
    cols = len(src)
    entries = [0] * (len(dst.monomials) * cols)
    one = 1 % mod.p
    for c, (i, j, l) in enumerate(src):
        for target in ((i + 1, j, l), (i, j + 1, l), (i, j, l + 1)):
            if max(target) < d:
                entries[where[target] * cols + c] = one
    return FpMatrix(len(dst.monomials), cols, tuple(entries), mod)


def wlp_bruteforce(d: int, p: int | PrimeModulus) -> WlpVerdict:
    """Check maximal rank of ``X+Y+Z`` in every degree 0 <= m <= 3d-4.

    Returns the first failing degree as a :class:`FailingDegree` witness.
    """
    _check_d(d)
    mod = as_modulus(p)
    h = hilbert_function(d)
    for m in range(3 * d - 3):
        r = rank(multiplication_matrix(d, mod, m))
        best = min(h[m], h[m + 1])
        if r < best:
            return WlpVerdict(False, FailingDegree(m, r, best))
    return WlpVerdict(True, None)
