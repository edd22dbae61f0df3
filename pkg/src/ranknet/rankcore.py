"""Rank comparators, comparison matrices, and the difference-matrix machinery.

A k-ary rank comparator never moves its inputs: it emits, for each input,
the position that input would occupy in a stable sort of the k values.
Summing row entries of the pairwise comparison matrix gives exactly those
ranks, which is what lets a full sort be decomposed into independent
comparator banks whose partial ranks are simply added.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError, InvalidKey

__all__ = [
    "stable_rank",
    "comparison_matrix",
    "row_sum_ranks",
    "is_realizable",
    "delta_matrix",
    "half_vectorize",
    "delta_identity_check",
    "integer_matrix_rank",
    "as_keys",
]


def as_keys(x) -> np.ndarray:
    """Validate and convert a key sequence to a 1-D numpy array.

    Keys must be finite, totally ordered scalars. NaN and infinities are
    rejected rather than given an arbitrary ordering.
    """
    a = np.asarray(x)
    if a.ndim != 1:
        raise DimensionError(f"expected a 1-D sequence of keys, got shape {a.shape}")
    if a.size == 0:
        raise DimensionError("key sequence must be nonempty")
    if a.dtype.kind == "f":
        if not np.isfinite(a).all():
            raise InvalidKey("keys must be finite (no NaN or infinity)")
    elif a.dtype.kind not in "iu":
        raise InvalidKey(f"keys must be real scalars, got dtype {a.dtype}")
    return a


def stable_rank(x) -> np.ndarray:
    """Stable rank of every element of x.

    rank[i] = #{j : x[j] < x[i]} + #{j < i : x[j] == x[i]}, i.e. ties are
    broken by original position, so the result is always a permutation of
    0..N-1 and applying it sorts x stably.
    """
    a = as_keys(x)
    order = np.argsort(a, kind="stable")
    ranks = np.empty(a.size, dtype=np.int64)
    ranks[order] = np.arange(a.size)
    return ranks


def comparison_matrix(x) -> np.ndarray:
    """Pairwise comparison matrix of x.

    Upper triangle holds (x[i] > x[j]); the lower triangle is the boolean
    complement of the transposed entry; the diagonal is 0. The complemented
    lower triangle is what makes ranking of equal keys stable.
    """
    a = as_keys(x)
    gt = a[:, None] > a[None, :]
    return np.triu(gt, 1) | np.tril(~gt.T, -1)


def _check_cmp(c) -> np.ndarray:
    c = np.asarray(c, dtype=bool)
    if c.ndim != 2 or c.shape[0] != c.shape[1]:
        raise DimensionError(f"comparison matrix must be square, got {c.shape}")
    if c.diagonal().any():
        raise InvalidKey("comparison matrix diagonal must be zero")
    off = ~np.eye(c.shape[0], dtype=bool)
    if not (c[off] ^ c.T[off]).all():
        raise InvalidKey("comparison matrix must be 1-bit skew-symmetric")
    return c


def row_sum_ranks(c) -> np.ndarray:
    """Row sums of a comparison matrix.

    For a matrix built from real keys this equals stable_rank of those keys;
    for an arbitrary skew-symmetric boolean matrix it may fail to be a
    permutation (see is_realizable).
    """
    c = _check_cmp(c)
    return c.sum(axis=1, dtype=np.int64)


def is_realizable(c) -> bool:
    """Whether some key sequence produces this comparison matrix.

    Criterion: the row sums form a permutation of 0..N-1. This is the
    transitive-tournament score condition; the classic 4x4 counterexample
    with row sums [1,2,2,1] is rejected.
    """
    sums = row_sum_ranks(c)
    n = sums.size
    return bool(np.array_equal(np.sort(sums), np.arange(n)))


def delta_matrix(n: int) -> np.ndarray:
    """Signed pair-difference matrix of size N x N(N-1)/2.

    Column for the pair (i, j), i < j, is e_i - e_j; columns are ordered
    (0,1),(0,2),(1,2),(0,3),... This is the incidence matrix of the
    complete graph, so every column sums to zero and the rank is N-1.
    Satisfies the recursion D_N = [[D_{N-1}, I], [0, -1^T]] with
    D_2 = [1; -1].
    """
    if n < 2:
        raise DimensionError(f"delta_matrix needs N >= 2, got {n}")
    m = n * (n - 1) // 2
    d = np.zeros((n, m), dtype=np.int64)
    col = 0
    for j in range(1, n):
        for i in range(j):
            d[i, col] = 1
            d[j, col] = -1
            col += 1
    return d


def half_vectorize(c) -> np.ndarray:
    """Strict upper triangle of a comparison matrix as a flat vector.

    Column-major order: (0,1),(0,2),(1,2),(0,3),... matching the column
    order of delta_matrix.
    """
    c = _check_cmp(c)
    n = c.shape[0]
    rows, cols = np.tril_indices(n, -1)
    # (rows, cols) walks (1,0),(2,0),(2,1),... which transposed is exactly
    # the column-major upper triangle.
    return c[cols, rows]


def delta_identity_check(x) -> bool:
    """Verify C_N 1 = Delta_N c + n on a concrete key sequence.

    This is the identity behind the uniqueness of the summed ranks: the
    row sums of the comparison matrix decompose into a zero-column-sum
    combination of pair indicators plus the identity rank vector 0..N-1.
    """
    a = as_keys(x)
    n = a.size
    if n == 1:
        return True
    c = comparison_matrix(a)
    lhs = row_sum_ranks(c)
    rhs = delta_matrix(n) @ half_vectorize(c).astype(np.int64) + np.arange(n)
    return bool(np.array_equal(lhs, rhs))


def integer_matrix_rank(m) -> int:
    """Exact rank of an integer matrix via fraction-free (Bareiss) elimination.

    All arithmetic stays in integers; the divisions performed are exact.
    """
    a = np.array(m, dtype=np.int64)
    if a.ndim != 2:
        raise DimensionError("rank is defined for 2-D matrices")
    rows, cols = a.shape
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        p = nz[0] + r
        if p != r:
            a[[r, p]] = a[[p, r]]
        piv = a[r, c]
        if r + 1 < rows:
            sub = a[r + 1 :]
            a[r + 1 :] = (sub * piv - np.outer(sub[:, c], a[r])) // prev
            if np.abs(a[r + 1 :]).max(initial=0) >= 2**31:
                raise OverflowError("entries grew beyond the safe int64 range")
        prev = piv
        r += 1
    return r
