"""Divisor partitioning: one D-ary level plus D levels of d-ary comparators.

For N = d * D with d the smallest prime factor, same-block pairs are handled
by two big block comparators and every cross-block pair by exactly one small
comparator. The partial ranks from all levels simply add up to the full
permutation, reproducing the worked N = 8 table.
"""

from ranknet import divisor_network, execute, partial_rank_table, table_to_csv
from ranknet import validate_network

x = [5, 12, 2, 3, 5, 7, 8, 6]
net = divisor_network(8)

print("levels and arities:")
for i, level in enumerate(net.levels):
    print(f"  L{i}:", [c.indices for c in level.comparators])

print("\nvalidation:", validate_network(net).ok)
print("permutation:", execute(net, x))

table = partial_rank_table(net, x)
print("\npartial ranks per level (rows are positions):")
print(table_to_csv(table, x))
