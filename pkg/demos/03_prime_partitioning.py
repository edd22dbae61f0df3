"""Prime partitioning: recurse until every comparator has prime arity.

The recursion replaces each block comparator by its own decomposition and
merges sibling levels, so for N = 12 we end up with 9 binary levels and 1
ternary level, 54 binary and 4 ternary comparators in total. Those counts
match the closed-form coefficients exactly.
"""

from collections import Counter

import numpy as np

from ranknet import (
    comparator_coefficients,
    execute,
    level_coefficients,
    network_to_dot,
    partial_rank_count,
    prime_network,
    stable_rank,
)

n = 12
net = prime_network(n)

print(f"prime network for N={n}: {len(net.levels)} levels")
print("comparators by arity:", dict(Counter(c.arity for c in net.comparators())))
print("level coefficients:", level_coefficients(n))
print("comparator coefficients:", comparator_coefficients(n))
print("|L_N| =", partial_rank_count(n))

rng = np.random.default_rng(1)
x = rng.integers(0, 6, n)
print("\nx =", x)
print("network ranks:", execute(net, x))
print("stable ranks: ", stable_rank(x))

dot = network_to_dot(prime_network(4))
print("\nDOT for the N=4 network (3 levels of 2 binary comparators):")
print(dot)
