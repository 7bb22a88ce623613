"""Exact integer linear algebra: fraction-free determinants, rank, and a
vectorized scanner for the absolute values of all maximal minors."""

from __future__ import annotations

from itertools import combinations
from math import comb, factorial

import numpy as np


def det_bareiss(rows) -> int:
    """Determinant of a square integer matrix by fraction-free Bareiss
    elimination; all intermediate divisions are exact."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[-1][-1]


def rank_int(rows) -> int:
    """Rank over the rationals of an integer matrix (fraction-free elimination)."""
    a = [list(map(int, r)) for r in rows]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pivot = a[rank][col]
        for i in range(rank + 1, nrows):
            ai = a[i]
            aic = ai[col]
            for j in range(col, ncols):
                ai[j] = (pivot * ai[j] - aic * a[rank][j]) // prev
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank


def _dp_dets_int64(batch: np.ndarray) -> np.ndarray:
    """Determinants of a (B, k, k) int64 batch by division-free expansion:
    dp[S] = det of the first |S| rows on column set S."""
    b, k, _ = batch.shape
    dp = {0: np.ones(b, dtype=np.int64)}
    for size in range(1, k + 1):
        nxt = {}
        for cols in combinations(range(k), size):
            s = 0
            for c in cols:
                s |= 1 << c
            acc = np.zeros(b, dtype=np.int64)
            sign = 1 if size % 2 == 1 else -1
            for idx, c in enumerate(cols):
                acc += sign * (1 if idx % 2 == 0 else -1) * batch[:, size - 1, c] * dp[s ^ (1 << c)]
            nxt[s] = acc
        dp = nxt
    return dp[(1 << k) - 1]


class MinorScanInfeasible(RuntimeError):
    """The exhaustive maximal-minor enumeration exceeds the feasibility guard."""


def maximal_minor_values(rows, guard: int = 10_000_000, chunk: int = 100_000):
    """Scan all k x k minors of an integer matrix with m >= k rows and k columns
    (k = number of columns).  Returns (value_to_example, count) where
    value_to_example maps each occurring |det| to one witnessing row subset.

    Raises MinorScanInfeasible when C(m, k) exceeds ``guard``.
    """
    mat = [tuple(map(int, r)) for r in rows]
    m = len(mat)
    k = len(mat[0]) if mat else 0
    if any(len(r) != k for r in mat):
        raise ValueError("ragged matrix")
    if m < k:
        return {}, 0
    total = comb(m, k)
    if total > guard:
        raise MinorScanInfeasible(
            f"C({m},{k}) = {total} maximal minors exceeds the guard of {guard}")
    bound = max((abs(x) for r in mat for x in r), default=0)
    use_numpy = factorial(k) * max(bound, 1) ** k < 2 ** 62
    examples: dict = {}
    if use_numpy and total:
        arr = np.array(mat, dtype=np.int64)
        combos = combinations(range(m), k)
        done = 0
        while done < total:
            block = [c for _, c in zip(range(chunk), combos)]
            if not block:
                break
            idx = np.array(block, dtype=np.intp)
            dets = np.abs(_dp_dets_int64(arr[idx]))
            for val in np.unique(dets):
                if int(val) not in examples:
                    pos = int(np.argmax(dets == val))
                    examples[int(val)] = block[pos]
            done += len(block)
    else:
        for sub in combinations(range(m), k):
            d = abs(det_bareiss([mat[i] for i in sub]))
            if d not in examples:
                examples[d] = sub
    return examples, total
