"""Shared test oracles and helpers (kept independent of the library code)."""

from fractions import Fraction
from math import comb


def bernoulli_numbers(nmax):
    """B_0..B_nmax with B_1 = -1/2, from the defining recurrence
    sum_{k=0}^{m-1} C(m+1, k) B_k = -(m+1) B_m for m >= 1."""
    values = [Fraction(1)]
    for m in range(1, nmax + 1):
        values.append(-sum(comb(m + 1, k) * values[k] for k in range(m)) / (m + 1))
    return values


def random_rationals(rng, count, bound=50):
    """Deterministic sample of rationals with |num| <= bound, den <= bound."""
    return [
        Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        for _ in range(count)
    ]
