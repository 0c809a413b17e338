"""
Laurent polynomials and the constant-term route
===============================================

Sparse two-variable Laurent polynomials with exact integer coefficients:
exponents may be negative, and powers are computed by repeated squaring.
The deal counts fall out of one polynomial identity.
"""

from trideal import LaurentPoly, identity_polynomials, sequence_term

# Build by hand: (x + 1/x)^2 = x^2 + 2 + x^-2.
x = LaurentPoly.monomial(1, 0)
x_inv = LaurentPoly.monomial(-1, 0)
print("(x + 1/x)^2 =", ((x + x_inv) ** 2).to_text())

# The identity: base = 1 + (1+x)(1+y/x)(1+1/y) factors as
# (1 + (1+x)/y) * (1 + y(1+1/x)).
base, factor1, factor2 = identity_polynomials()
print("\nbase    =", base.to_text())
print("factor1 =", factor1.to_text())
print("factor2 =", factor2.to_text())
print("factor1 * factor2 == base:", factor1 * factor2 == base)

# Because the factorization holds, base**n = factor1**n * factor2**n for
# every n, and the constant terms of both sides count the deals.
print("\nconstant terms of base**n:", [sequence_term(n) for n in range(6)])

# The support of base**n stays inside the box [-n, n] x [-n, n], so the
# term count grows only quadratically.
power = base ** 6
print(f"base**6 has {len(power)} terms, constant term {power.constant_term()}")
