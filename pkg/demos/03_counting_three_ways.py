"""
One family, three counts
========================

The number of deals over n denominations can be computed three independent
ways, and they agree exactly:

  1. counting by denomination-set size:     sum_k C(n,k) * sum_j C(k,j)**3
  2. counting by red's distinct values:     sum_k C(n,k)**2 * C(2k,k)
  3. the constant term of a Laurent power:  [x^0 y^0] (1+(1+x)(1+y/x)(1+1/y))**n

The equality of 1 and 2 is a binomial identity; route 3 proves it again by
equating constant terms across a polynomial factorization.
"""

from trideal import count_deals, lhs_sum, rhs_sum, sequence_term

print(f"{'n':>3} {'by |S|':>16} {'by red-distinct':>16} {'constant term':>16} {'enumerated':>11}")
for n in range(7):
    brute = count_deals(n) if n <= 5 else "-"
    print(f"{n:>3} {lhs_sum(n):>16} {rhs_sum(n):>16} {sequence_term(n):>16} {brute:>11}")

# The agreement holds at any scale; the values just get long.
n = 40
assert lhs_sum(n) == rhs_sum(n) == sequence_term(n)
print(f"\nn={n}: all three routes give {lhs_sum(n)}")
