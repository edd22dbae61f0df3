"""Comparator network construction, validation, and serialization.

Three builders are provided:

* binary_network  -- one binary comparator per unordered pair, scheduled
  into rounds by the circle method so each round's comparators are disjoint.
* divisor_network -- one level of D-ary block comparators followed by D
  levels of d-ary cross-block comparators, where d is the smallest prime
  factor of N and D = N/d.
* prime_network   -- divisor decomposition applied recursively until every
  comparator arity is a prime factor of N; sibling sub-networks at equal
  depth share levels so each level spans all N positions.

Networks never move data: every comparator emits local stable ranks and the
engine adds them into a global accumulator.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import DimensionError, ValidationError

__all__ = [
    "Builder",
    "Comparator",
    "Level",
    "Network",
    "ValidationReport",
    "smallest_prime_factor",
    "is_prime",
    "ascending_factorization",
    "index_vector_v",
    "index_vector_w",
    "binary_network",
    "divisor_network",
    "prime_network",
    "build_network",
    "validate_network",
    "network_to_json",
    "network_from_json",
    "network_to_dot",
]


class Builder(str, Enum):
    BINARY = "binary"
    DIVISOR = "divisor"
    PRIME = "prime"


@dataclass(slots=True)
class Comparator:
    """A k-ary comparator identified by its strictly increasing global indices."""

    indices: tuple[int, ...]

    @property
    def arity(self) -> int:
        return len(self.indices)


@dataclass(slots=True)
class Level:
    """A set of comparators whose index sets are disjoint (one parallel round)."""

    comparators: list[Comparator]


@dataclass
class Network:
    n: int
    levels: list[Level]
    builder: Builder
    _groups: dict[int, np.ndarray] | None = field(
        default=None, repr=False, compare=False
    )

    def comparators(self):
        for level in self.levels:
            yield from level.comparators

    def arity_groups(self) -> dict[int, np.ndarray]:
        """All comparator index lists, grouped by arity into (m, k) int arrays.

        Cached; the arrays are also sanity checked (bounds, strict increase)
        so the engine can trust them.
        """
        if self._groups is None:
            raw: dict[int, list[tuple[int, ...]]] = {}
            for comp in self.comparators():
                raw.setdefault(len(comp.indices), []).append(comp.indices)
            groups = {}
            for k, rows in sorted(raw.items()):
                idx = np.asarray(rows, dtype=np.int64)
                if k < 2:
                    raise ValidationError("comparator arity must be >= 2")
                if idx.min(initial=0) < 0 or idx.max(initial=-1) >= self.n:
                    raise ValidationError("comparator index out of range")
                if k > 1 and not (np.diff(idx, axis=1) > 0).all():
                    raise ValidationError("comparator indices must be strictly increasing")
                groups[k] = idx
            self._groups = groups
        return self._groups


# ---------------------------------------------------------------------------
# number theory helpers


def smallest_prime_factor(n: int) -> int:
    """Least prime dividing n (n itself when n is prime)."""
    if n < 2:
        raise DimensionError(f"need N >= 2, got {n}")
    if n % 2 == 0:
        return 2
    if n % 3 == 0:
        return 3
    f = 5
    while f * f <= n:
        if n % f == 0:
            return f
        if n % (f + 2) == 0:
            return f + 2
        f += 6
    return n


def is_prime(n: int) -> bool:
    return n >= 2 and smallest_prime_factor(n) == n


def ascending_factorization(n: int) -> list[int]:
    """Prime factors of n in nondecreasing order, with multiplicity."""
    if n < 2:
        raise DimensionError(f"need N >= 2, got {n}")
    out = []
    while n > 1:
        p = smallest_prime_factor(n)
        out.append(p)
        n //= p
    return out


# ---------------------------------------------------------------------------
# index vectors


def index_vector_v(j: int, k: int, d: int, D: int) -> list[int]:
    """Cross-block index vector: element i is (j + k*i) mod D + D*i.

    Picks one position from each of the d contiguous blocks of size D;
    strictly increasing since consecutive elements differ by at least 1.
    """
    if not (0 <= j < D and 0 <= k < D):
        raise IndexError(f"j and k must lie in [0, {D}), got j={j}, k={k}")
    if d < 2:
        raise DimensionError(f"block count d must be >= 2, got {d}")
    return [(j + k * i) % D + D * i for i in range(d)]


def index_vector_w(j: int, D: int, d: int | None = None) -> list[int]:
    """Contiguous block index vector [jD, jD+1, ..., jD+D-1]."""
    if j < 0 or (d is not None and j >= d):
        raise IndexError(f"block index j={j} out of range")
    if D < 1:
        raise DimensionError(f"block size D must be >= 1, got {D}")
    return list(range(j * D, (j + 1) * D))


# ---------------------------------------------------------------------------
# builders


def binary_network(n: int) -> Network:
    """All N(N-1)/2 binary comparators, one per unordered pair.

    Rounds come from the circle method: N-1 rounds of N/2 pairs for even N,
    N rounds of (N-1)/2 pairs for odd N (one position idle per round).
    """
    if n < 2:
        raise DimensionError(f"need N >= 2, got {n}")
    m = n if n % 2 == 0 else n + 1
    levels = []
    for r in range(m - 1):
        comps = []
        a, b = m - 1, r
        if a < n and b < n:
            comps.append(Comparator((min(a, b), max(a, b))))
        for i in range(1, m // 2):
            a = (r + i) % (m - 1)
            b = (r - i) % (m - 1)
            if a < n and b < n:
                comps.append(Comparator((min(a, b), max(a, b))))
        levels.append(Level(comps))
    return Network(n, levels, Builder.BINARY)


def divisor_network(n: int) -> Network:
    """One level of d D-ary block comparators, then D levels of d-ary ones.

    d is the smallest prime factor of N and D = N/d; the cross-block levels
    are indexed by k = 0..D-1. Every unordered pair is covered exactly once:
    same-block pairs by the D-ary level, cross-block pairs by a unique (j, k)
    since differences below d are invertible mod D. Prime N degenerates to a
    single N-ary comparator.
    """
    if n < 2:
        raise DimensionError(f"need N >= 2, got {n}")
    if is_prime(n):
        return Network(n, [Level([Comparator(tuple(range(n)))])], Builder.DIVISOR)
    d = smallest_prime_factor(n)
    D = n // d
    levels = [Level([Comparator(tuple(index_vector_w(j, D, d))) for j in range(d)])]
    for k in range(D):
        levels.append(
            Level([Comparator(tuple(index_vector_v(j, k, d, D))) for j in range(D)])
        )
    return Network(n, levels, Builder.DIVISOR)


def _prime_levels(pos: tuple[int, ...]) -> list[list[Comparator]]:
    m = len(pos)
    if is_prime(m):
        return [[Comparator(pos)]]
    d = smallest_prime_factor(m)
    D = m // d
    blocks = [_prime_levels(pos[j * D : (j + 1) * D]) for j in range(d)]
    # Sibling blocks have identical shape; merge them level by level so each
    # level spans the whole index range.
    merged = [sum(parts, []) for parts in zip(*blocks)]
    for k in range(D):
        merged.append(
            [
                Comparator(tuple(pos[(j + k * i) % D + D * i] for i in range(d)))
                for j in range(D)
            ]
        )
    return merged


def prime_network(n: int) -> Network:
    """Recursive divisor decomposition down to prime-arity comparators."""
    if n < 2:
        raise DimensionError(f"need N >= 2, got {n}")
    levels = [Level(comps) for comps in _prime_levels(tuple(range(n)))]
    return Network(n, levels, Builder.PRIME)


_BUILDERS = {
    Builder.BINARY: binary_network,
    Builder.DIVISOR: divisor_network,
    Builder.PRIME: prime_network,
}


def build_network(n: int, builder: Builder | str) -> Network:
    return _BUILDERS[Builder(builder)](n)


# ---------------------------------------------------------------------------
# validation


@dataclass
class ValidationReport:
    ok: bool
    violations: list[str]


def validate_network(net: Network) -> ValidationReport:
    """Structural checks: levels, pair coverage, index lists, arities.

    Level coverage of all N positions is required for divisor and prime
    builders; the binary builder idles one position per round when N is odd,
    so only within-level disjointness is enforced there.
    """
    v: list[str] = []
    n = net.n
    for li, level in enumerate(net.levels):
        seen: set[int] = set()
        for comp in level.comparators:
            idx = comp.indices
            if len(idx) < 2:
                v.append(f"level {li}: comparator arity {len(idx)} < 2")
            if any(not (0 <= i < n) for i in idx):
                v.append(f"level {li}: index out of range in {idx}")
            if any(a >= b for a, b in zip(idx, idx[1:])):
                v.append(f"level {li}: indices not strictly increasing in {idx}")
            if seen.intersection(idx):
                v.append(f"level {li}: comparators overlap at {sorted(seen & set(idx))}")
            seen.update(idx)
        if net.builder in (Builder.DIVISOR, Builder.PRIME) and len(seen) != n:
            v.append(f"level {li}: does not cover all {n} positions")
        if net.builder == Builder.PRIME:
            for comp in level.comparators:
                if not is_prime(comp.arity):
                    v.append(f"level {li}: non-prime arity {comp.arity}")

    counts = np.zeros(n * n, dtype=np.int64)
    for comp in net.comparators():
        idx = comp.indices
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                counts[idx[a] * n + idx[b]] += 1
    iu, ju = np.triu_indices(n, 1)
    bad = np.nonzero(counts[iu * n + ju] != 1)[0]
    for t in bad[:10]:
        v.append(
            f"pair ({iu[t]},{ju[t]}) covered {counts[iu[t] * n + ju[t]]} times"
        )
    if bad.size > 10:
        v.append(f"... and {bad.size - 10} more pair-coverage violations")
    return ValidationReport(not v, v)


# ---------------------------------------------------------------------------
# serialization


def network_to_json(net: Network) -> str:
    doc = {
        "n": net.n,
        "builder": net.builder.value,
        "levels": [
            [{"indices": list(c.indices)} for c in level.comparators]
            for level in net.levels
        ],
    }
    return json.dumps(doc)


def network_from_json(doc) -> Network:
    if isinstance(doc, (str, bytes)):
        doc = json.loads(doc)
    try:
        levels = [
            Level([Comparator(tuple(c["indices"])) for c in level])
            for level in doc["levels"]
        ]
        return Network(int(doc["n"]), levels, Builder(doc["builder"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed network document: {exc}") from exc


def network_to_dot(net: Network) -> str:
    """Graphviz rendering: one cluster per level, one node per comparator.

    Each input position feeds its comparators; every comparator feeds the
    shared adder node that sums the partial ranks.
    """
    out = ["digraph ranknet {", "  rankdir=LR;"]
    for i in range(net.n):
        out.append(f'  x{i} [label="x{i}", shape=plaintext];')
    out.append('  adder [label="+", shape=doublecircle];')
    for li, level in enumerate(net.levels):
        out.append(f"  subgraph cluster_L{li} {{")
        out.append(f'    label="L{li}";')
        for ci, comp in enumerate(level.comparators):
            out.append(f'    c{li}_{ci} [label="C_{comp.arity}", shape=box];')
        out.append("  }")
    for li, level in enumerate(net.levels):
        for ci, comp in enumerate(level.comparators):
            for i in comp.indices:
                out.append(f"  x{i} -> c{li}_{ci};")
            out.append(f"  c{li}_{ci} -> adder;")
    out.append("}")
    return "\n".join(out) + "\n"
