"""Rank comparators and the comparison matrix.

A comparator never reorders its inputs; it only reports, for each input,
the position it would take in a stable sort. The full rank vector is just
the row sums of the pairwise comparison matrix, whose complemented lower
triangle is what makes equal keys come out in original order.
"""

import numpy as np

from ranknet import (
    apply_permutation,
    comparison_matrix,
    delta_identity_check,
    is_realizable,
    row_sum_ranks,
    stable_rank,
)

x = [6.4, -9.3, 0.1]
print("x =", x)
print("stable ranks:", stable_rank(x))

c = comparison_matrix(x)
print("comparison matrix:\n", c.astype(int))
print("row sums:", row_sum_ranks(c))
print("sorted:", apply_permutation(np.asarray(x), stable_rank(x)))

# ties are broken by original position, so equal keys stay in order
print("\nranks of [5, 5, 3, 5]:", stable_rank([5, 5, 3, 5]))

# not every skew-symmetric boolean matrix comes from a real sequence:
# this 4x4 one has row sums [1, 2, 2, 1], which no key vector produces
s4 = [[0, 0, 0, 1], [1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 0, 0]]
print("\nrow sums of the counterexample:", row_sum_ranks(s4))
print("realizable?", is_realizable(s4))

# the difference-matrix identity behind rank uniqueness holds for any input
rng = np.random.default_rng(0)
print(
    "\ndelta identity on 20 random vectors:",
    all(delta_identity_check(rng.standard_normal(8)) for _ in range(20)),
)
