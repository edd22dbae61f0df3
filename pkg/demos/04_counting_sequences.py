"""Counting sequences and the Maundy-cake connection.

The number of partial-rank columns |L_N| obeys the Maundy-cake recurrence
a(N) = max over divisors d of d*a(N/d) + 1 (OEIS A006022), with extremes at
primes (1 level) and powers of two (N-1 levels). The comparator count |C_N|
gives a sequence of its own, printed below for N up to 50.
"""

from ranknet import (
    addition_complexity,
    maundy_a,
    partial_rank_count,
    total_comparators,
)
from ranknet.analytics import profile_csv

print("N, |L_N|, maundy a(N), adds, |C_N|")
for n in range(2, 17):
    print(
        f"{n:3d} {partial_rank_count(n):5d} {maundy_a(n):6d} "
        f"{addition_complexity(n):5d} {total_comparators(n):6d}"
    )

assert all(maundy_a(n) == partial_rank_count(n) for n in range(2, 5001))
print("\nMaundy identity verified for N up to 5000")

print("\ncomparator counts for N = 1..50:")
print([total_comparators(n) for n in range(1, 51)])

print("\nCSV profile for N up to 10:")
print(profile_csv(10, per_prime=True))
