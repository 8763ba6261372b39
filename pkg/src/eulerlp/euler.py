"""Euler numbers, Euler polynomials, alternating power sums, and partial
zeta values at negative integers, all in exact rational arithmetic.

Conventions: E_n(x) is the coefficient sequence of 2 e^{xt} / (e^t + 1) and
E_n = E_n(0), so E_0 = 1, E_1 = -1/2, E_3 = 1/4, and every E_n has a power
of two as denominator (making each one a p-adic integer for odd p).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

Rational = Fraction | int


@lru_cache(maxsize=None)
def euler_number(n: int) -> Fraction:
    """The n-th Euler number E_n = E_n(0).

    Multiplying the generating function by e^t + 1 forces E_0 = 1 and
    E_n = -(1/2) sum_{k=0}^{n-1} C(n, k) E_k for n >= 1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    return -sum(comb(n, k) * euler_number(k) for k in range(n)) / 2


def euler_numbers(nmax: int) -> list[Fraction]:
    """[E_0, E_1, ..., E_nmax]."""
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    return [euler_number(k) for k in range(nmax + 1)]


@dataclass(frozen=True)
class EulerPolynomial:
    """E_n(x) with explicit coefficients; ``coefficients[i]`` multiplies x^i.

    E_n(x) is monic of degree n, and for n >= 1 the x^{n-1} coefficient is
    -n/2 (the binomial expansion pins it to n * E_1).
    """

    degree: int
    coefficients: tuple[Fraction, ...]

    def __call__(self, x: Rational) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * x + c
        return value


@lru_cache(maxsize=None)
def euler_polynomial(n: int) -> EulerPolynomial:
    """E_n(x) = sum_{k=0}^{n} C(n, k) E_k x^{n-k}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    coefficients = tuple(comb(n, i) * euler_number(n - i) for i in range(n + 1))
    return EulerPolynomial(n, coefficients)


def euler_polynomial_value(n: int, x: Rational) -> Fraction:
    """E_n evaluated at a rational point, exactly."""
    return euler_polynomial(n)(Fraction(x))


def alternating_power_sum(n: int, m: int) -> Fraction:
    """2 sum_{l=0}^{n-1} (-1)^l l^m by direct summation (0^0 counts as 1)."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be >= 0")
    return 2 * sum((((-1) ** l) * Fraction(l) ** m for l in range(n)), Fraction(0))


def alternating_power_sum_closed(n: int, m: int) -> Fraction:
    """Closed form of :func:`alternating_power_sum` for even n:

        -sum_{l=0}^{m-1} C(m, l) E_l n^{m-l}
    """
    if n < 2 or n % 2:
        raise ValueError("the closed form needs even n >= 2")
    if m < 0:
        raise ValueError("m must be >= 0")
    return -sum(
        (comb(m, l) * euler_number(l) * Fraction(n) ** (m - l) for l in range(m)),
        Fraction(0),
    )


def partial_zeta_neg(n: int, a: int, modulus: int) -> Fraction:
    """Value at -n of the alternating partial zeta restricted to the class
    a mod modulus: (-1)^a (modulus^n / 2) E_n(a / modulus)."""
    if modulus < 1 or modulus % 2 == 0:
        raise ValueError("modulus must be odd")
    if not 0 < a < modulus:
        raise ValueError("need 0 < a < modulus")
    if n < 0:
        raise ValueError("n must be >= 0")
    sign = -1 if a % 2 else 1
    return sign * Fraction(modulus) ** n / 2 * euler_polynomial_value(n, Fraction(a, modulus))


def distribution_check(n: int, f: int, x: Rational) -> bool:
    """Does E_n(x) equal f^n sum_{a=0}^{f-1} (-1)^a E_n((x + a) / f)?

    Holds for every odd f; the comparison is exact.
    """
    if f < 1 or f % 2 == 0:
        raise ValueError("f must be odd")
    if n < 0:
        raise ValueError("n must be >= 0")
    x = Fraction(x)
    rhs = Fraction(f) ** n * sum(
        ((-1) ** a) * euler_polynomial_value(n, (x + a) / f) for a in range(f)
    )
    return euler_polynomial_value(n, x) == rhs
