"""Exact closed-form counts for the deal family.

Everything here is arbitrary-precision integer arithmetic; values grow
exponentially in n and must never be truncated.
"""

from __future__ import annotations

import math

__all__ = [
    "binomial",
    "franel",
    "lhs_sum",
    "red_distinct_count",
    "red_prefix_sum",
    "red_set_count",
    "rhs_sum",
    "vandermonde_inner",
]


def _require_nonneg(n: int) -> None:
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")


def _require_k_range(n: int, k: int) -> None:
    _require_nonneg(n)
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")


def binomial(n: int, k: int) -> int:
    """C(n, k), with the convention C(n, k) = 0 for k < 0 or k > n."""
    _require_nonneg(n)
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def franel(n: int) -> int:
    """Franel number sum_j C(n, j)**3: full-deck deals over n denominations."""
    _require_nonneg(n)
    return sum(binomial(n, j) ** 3 for j in range(n + 1))


def lhs_sum(n: int) -> int:
    """All deals, counted by denomination-set size: sum_k C(n, k) * franel(k)."""
    _require_nonneg(n)
    return sum(binomial(n, k) * franel(k) for k in range(n + 1))


def rhs_sum(n: int) -> int:
    """All deals, counted by red's distinct denominations: sum_k C(n, k)**2 * C(2k, k)."""
    _require_nonneg(n)
    return sum(binomial(n, k) ** 2 * binomial(2 * k, k) for k in range(n + 1))


def red_set_count(n: int, k: int) -> int:
    """Deals whose red hand shows one fixed k-element denomination set: C(n, k) * C(2k, k)."""
    _require_k_range(n, k)
    return binomial(n, k) * binomial(2 * k, k)


def red_distinct_count(n: int, k: int) -> int:
    """Deals with exactly k distinct denominations in red's hand: C(n, k)**2 * C(2k, k)."""
    _require_k_range(n, k)
    return binomial(n, k) * red_set_count(n, k)


def vandermonde_inner(k: int, a: int) -> int:
    """sum_b C(k-a, b) * C(k+a, k-b); equals C(2k, k) for every 0 <= a <= k."""
    if not 0 <= a <= k:
        raise ValueError(f"need 0 <= a <= k, got a={a}, k={k}")
    return sum(binomial(k - a, b) * binomial(k + a, k - b) for b in range(k + 1))


def red_prefix_sum(n: int) -> int:
    """sum_k C(n, k) * C(2k, k): deals whose red denominations are a prefix 1..k."""
    _require_nonneg(n)
    return sum(red_set_count(n, k) for k in range(n + 1))
