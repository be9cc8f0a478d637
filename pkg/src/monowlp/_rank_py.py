"""Pure-Python rank kernel, used when the compiled extension is unavailable."""

from __future__ import annotations

from typing import Sequence


def rank_mod_p(entries: Sequence[int], rows: int, cols: int, p: int) -> int:
    """Rank of a row-major ``rows x cols`` matrix with residues in ``[0, p)``.

    Gaussian elimination over F_p, taking the first nonzero pivot in each
    column.  ``ends[r]`` bounds the last nonzero column of row ``r`` so that
    row operations on banded inputs only touch the band.
    """
    if rows == 0 or cols == 0:
        return 0
    work = [list(entries[r * cols:(r + 1) * cols]) for r in range(rows)]
    ends = []
    for row in work:
        e = cols
        while e > 0 and row[e - 1] == 0:
            e -= 1
        ends.append(e)

    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        pivot = -1
        for r in range(rank, rows):
            if work[r][col]:
                pivot = r
                break
        if pivot < 0:
            continue
        if pivot != rank:
            work[rank], work[pivot] = work[pivot], work[rank]
            ends[rank], ends[pivot] = ends[pivot], ends[rank]
        prow = work[rank]
        pend = ends[rank]
        inv = pow(prow[col], p - 2, p)
        for r in range(rank + 1, rows):
            row = work[r]
            a = row[col]
            if not a:
                continue
            f = (p - a) * inv % p
            for c in range(col, pend):
                row[c] = (row[c] + f * prow[c]) % p
            if pend > ends[r]:
                ends[r] = pend
        rank += 1
    return rank
