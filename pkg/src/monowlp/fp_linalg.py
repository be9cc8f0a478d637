"""Prime-field arithmetic and exact rank of dense matrices over F_p.

Ranks over F_p agree with ranks over any extension field (rank is decided
by which minors vanish), so computing over the prime field is enough for
statements about an algebraically closed field of characteristic p.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Sequence

try:
    from ._rank_c import rank_mod_p as _rank_kernel

    BACKEND = "compiled"
except ImportError:  # pragma: no cover - exercised only without a build
    from ._rank_py import rank_mod_p as _rank_kernel

    BACKEND = "python"

MAX_MODULUS = 2**31


def is_prime(n: int) -> bool:
    """Deterministic trial division up to ``isqrt(n)``."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for f in range(3, isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    return [q for q in range(2, n + 1) if is_prime(q)]


@dataclass(frozen=True)
class PrimeModulus:
    p: int

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise TypeError(f"modulus must be an int, got {type(self.p).__name__}")
        if not 2 <= self.p < MAX_MODULUS:
            raise ValueError(f"modulus {self.p} outside [2, 2^31)")
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    def __int__(self):
        return self.p


def as_modulus(p: int | PrimeModulus) -> PrimeModulus:
    return p if isinstance(p, PrimeModulus) else PrimeModulus(p)


@dataclass(frozen=True)
class FpMatrix:
    """Dense row-major matrix over F_p with entries reduced into ``[0, p)``."""

    rows: int
    cols: int
    entries: tuple[int, ...]
    modulus: PrimeModulus

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix shape")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        p = self.modulus.p
        if self.entries and (min(self.entries) < 0 or max(self.entries) >= p):
            raise ValueError(f"entry outside [0, {p})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], p: int | PrimeModulus,
                  cols: int | None = None) -> "FpMatrix":
        """Build from nested rows, reducing every entry mod p."""
        mod = as_modulus(p)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        flat: list[int] = []
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged rows")
            flat.extend(x % mod.p for x in row)
        return cls(len(rows), cols, tuple(flat), mod)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int | PrimeModulus) -> "FpMatrix":
        return cls(rows, cols, (0,) * (rows * cols), as_modulus(p))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def transpose(self) -> "FpMatrix":
        t = tuple(self.entries[i * self.cols + j]
                  for j in range(self.cols) for i in range(self.rows))
        return FpMatrix(self.cols, self.rows, t, self.modulus)


def rank(m: FpMatrix) -> int:
    """Rank of ``m`` over F_p by exact elimination."""
    return _rank_kernel(m.entries, m.rows, m.cols, m.modulus.p)

