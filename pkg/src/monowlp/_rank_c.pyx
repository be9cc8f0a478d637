# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled rank kernel over F_p; same algorithm as ``_rank_py``."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t


cdef int64_t _inverse(int64_t a, int64_t p):
    cdef int64_t result = 1, base = a % p, e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def rank_mod_p(entries, Py_ssize_t rows, Py_ssize_t cols, long long p):
    """Rank of a row-major ``rows x cols`` matrix with residues in ``[0, p)``."""
    if rows == 0 or cols == 0:
        return 0
    cdef Py_ssize_t n = rows * cols
    cdef int64_t *m = <int64_t *> malloc(n * sizeof(int64_t))
    cdef Py_ssize_t *ends = <Py_ssize_t *> malloc(rows * sizeof(Py_ssize_t))
    if m == NULL or ends == NULL:
        free(m)
        free(ends)
        raise MemoryError()
    cdef Py_ssize_t i, r, c, col, pivot, e, pend, rank = 0
    cdef int64_t a, f, inv, tmp, mod = p
    cdef int64_t *prow
    cdef int64_t *row
    try:
        i = 0
        for x in entries:
            m[i] = x
            i += 1
        for r in range(rows):
            e = cols
            while e > 0 and m[r * cols + e - 1] == 0:
                e -= 1
            ends[r] = e
        for col in range(cols):
            if rank == rows:
                break
            pivot = -1
            for r in range(rank, rows):
                if m[r * cols + col] != 0:
                    pivot = r
                    break
            if pivot < 0:
                continue
            if pivot != rank:
                for c in range(col, cols):
                    tmp = m[rank * cols + c]
                    m[rank * cols + c] = m[pivot * cols + c]
                    m[pivot * cols + c] = tmp
                e = ends[rank]
                ends[rank] = ends[pivot]
                ends[pivot] = e
            prow = m + rank * cols
            pend = ends[rank]
            inv = _inverse(prow[col], mod)
            for r in range(rank + 1, rows):
                row = m + r * cols
                a = row[col]
                if a == 0:
                    continue
                f = (mod - a) * inv % mod
                for c in range(col, pend):
                    row[c] = (row[c] + f * prow[c]) % mod
                if pend > ends[r]:
                    ends[r] = pend
            rank += 1
        return rank
    finally:
        free(m)
        free(ends)
