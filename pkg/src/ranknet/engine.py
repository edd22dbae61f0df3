"""Execute comparator networks: local stable ranks, scatter-add, reduce.

Each comparator computes the stable ranks of its slice of the input and the
engine adds them into a global integer accumulator. Within a level the
comparators touch disjoint positions and across levels integer addition is
associative and commutative, so the result is bit-identical for any worker
count or scheduling order.
"""

from __future__ import annotations

import io
import csv
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, PermutationError
from .netbuild import Level, Network
from .rankcore import as_keys

__all__ = [
    "execute",
    "partial_rank_table",
    "apply_permutation",
    "PartialRankTable",
    "table_to_csv",
]

# comparator work is tiny; below this size dispatch overhead dominates
PARALLEL_THRESHOLD = 64


def _local_ranks(vals: np.ndarray) -> np.ndarray:
    """Row-wise stable ranks of an (m, k) array of comparator inputs."""
    k = vals.shape[1]
    if k == 2:
        hi = (vals[:, 0] > vals[:, 1]).astype(np.int64)
        return np.stack([hi, 1 - hi], axis=1)
    order = np.argsort(vals, axis=1, kind="stable")
    ranks = np.empty(vals.shape, dtype=np.int64)
    np.put_along_axis(
        ranks, order, np.broadcast_to(np.arange(k, dtype=np.int64), vals.shape), axis=1
    )
    return ranks


def _accumulate(x: np.ndarray, idx: np.ndarray, n: int) -> np.ndarray:
    ranks = _local_ranks(x[idx])
    # bincount with integer-valued weights is exact here: every partial sum
    # is a small integer, far below 2**53
    return np.bincount(idx.ravel(), weights=ranks.ravel(), minlength=n).astype(
        np.int64
    )


def execute(net: Network, x, workers: int | None = None) -> np.ndarray:
    """Run the network on x and return the permutation vector.

    Equals the stable rank of x for any valid builder topology. ``workers``
    controls how comparator batches are fanned out; results do not depend
    on it.
    """
    a = as_keys(x)
    if a.size != net.n:
        raise DimensionError(f"input length {a.size} != network size {net.n}")
    groups = net.arity_groups()
    if workers is None:
        workers = os.cpu_count() or 1
    tasks: list[np.ndarray] = []
    if workers > 1 and net.n >= PARALLEL_THRESHOLD:
        for idx in groups.values():
            tasks.extend(np.array_split(idx, workers))
        tasks = [t for t in tasks if t.size]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda t: _accumulate(a, t, net.n), tasks))
    else:
        parts = [_accumulate(a, idx, net.n) for idx in groups.values()]
    acc = np.zeros(net.n, dtype=np.int64)
    for p in parts:
        acc += p
    return acc


@dataclass
class PartialRankTable:
    """Per-level partial ranks: one length-N column per level, summing to pi."""

    n: int
    columns: list[tuple[str, np.ndarray]]
    total: np.ndarray


def _level_column(level: Level, a: np.ndarray, n: int) -> np.ndarray:
    col = np.zeros(n, dtype=np.int64)
    by_arity: dict[int, list[tuple[int, ...]]] = {}
    for comp in level.comparators:
        by_arity.setdefault(comp.arity, []).append(comp.indices)
    for rows in by_arity.values():
        idx = np.asarray(rows, dtype=np.int64)
        # disjoint within a level, so plain assignment is safe
        col[idx.ravel()] = _local_ranks(a[idx]).ravel()
    return col


def partial_rank_table(net: Network, x) -> PartialRankTable:
    """One partial-rank column per level, plus their sum (the permutation)."""
    a = as_keys(x)
    if a.size != net.n:
        raise DimensionError(f"input length {a.size} != network size {net.n}")
    columns = []
    total = np.zeros(net.n, dtype=np.int64)
    for li, level in enumerate(net.levels):
        col = _level_column(level, a, net.n)
        arities = sorted({c.arity for c in level.comparators})
        label = f"L{li}(C{'/'.join(str(k) for k in arities)})"
        columns.append((label, col))
        total += col
    return PartialRankTable(net.n, columns, total)


def table_to_csv(table: PartialRankTable, x=None) -> str:
    """CSV layout mirroring the partial-rank tables: row per position."""
    buf = io.StringIO()
    w = csv.writer(buf)
    header = ["i"] + (["x"] if x is not None else [])
    header += [label for label, _ in table.columns] + ["pi"]
    w.writerow(header)
    for i in range(table.n):
        row = [i] + ([x[i]] if x is not None else [])
        row += [int(col[i]) for _, col in table.columns] + [int(table.total[i])]
        w.writerow(row)
    return buf.getvalue()


def apply_permutation(x, pi) -> np.ndarray:
    """Scatter x into sorted order: result[pi[i]] = x[i]."""
    a = np.asarray(x)
    p = np.asarray(pi, dtype=np.int64)
    if a.ndim != 1 or p.shape != a.shape:
        raise DimensionError("x and pi must be 1-D of equal length")
    if not np.array_equal(np.sort(p), np.arange(a.size)):
        raise PermutationError("pi is not a permutation of 0..N-1")
    s = np.empty_like(a)
    s[p] = a
    return s
