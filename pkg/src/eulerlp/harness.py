"""End-to-end verification of the main congruence and the identity suites.

The main congruence states that for an odd prime p, even n and r >= 1,
twice the alternating harmonic sum over units j <= np satisfies

    2 sum' (-1)^j / j^r  =  -sum_{k>=1} C(-r, k) (pn)^k l_p(r+k, w^{-k-r})

as p-adic numbers.  The left side is an exact rational with denominator
prime to p; the right side is truncated at k = M since term k has
valuation >= k.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .characters import teichmuller_power
from .euler import (
    alternating_power_sum,
    alternating_power_sum_closed,
    euler_polynomial_value,
)
from .lfunctions import TruncationPlan, interpolation_check, kummer_check, padic_l
from .padic import PadicContext, PadicNumber, binomial, is_prime
from .reports import CongruenceReport, format_rational, padic_report, rational_report


def alt_harmonic_sum(p: int, n: int, r: int) -> Fraction:
    """sum of (-1)^j / j^r over j = 1..n*p with p not dividing j, exactly.

    The denominator is automatically prime to p.  Note the sum itself is
    returned; the congruence compares twice this value.
    """
    if p < 3 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    if n < 0 or n % 2:
        raise ValueError("n must be even and >= 0")
    if r < 1:
        raise ValueError("r must be >= 1")
    total = Fraction(0)
    for j in range(1, n * p + 1):
        if j % p:
            total += Fraction((-1) ** j, j**r)
    return total


def main_congruence_series(
    p: int, n: int, r: int, ctx: PadicContext, digits: int, *, margin: int = 0
) -> PadicNumber:
    """-sum_{k=1}^{K} C(-r, k) (pn)^k l_p(r+k, w^{-k-r}) mod p^digits.

    K = digits + margin; since (pn)^k has valuation >= k and l_p values lie
    in Z_p, any K >= digits gives the same residue.
    """
    plan = TruncationPlan(digits, digits + margin)
    pn = ctx.from_int(p * n)
    pn_power = ctx.one()
    total = ctx.zero()
    for k in range(1, digits + margin + 1):
        pn_power = pn_power * pn
        chi = teichmuller_power(-(k + r), ctx)
        total = total + ctx.from_int(binomial(-r, k)) * pn_power * padic_l(
            r + k, chi, ctx, plan
        )
    return (-total).reduce(digits)


def verify_main_congruence(
    p: int, n: int, r: int, digits: int, *, margin: int = 0
) -> CongruenceReport:
    """Embed 2 * alt_harmonic_sum(p, n, r) and compare with the series side
    mod p^digits; the report is labeled "theorem6" in CLI vocabulary."""
    if n < 2 or n % 2:
        raise ValueError("n must be even and >= 2")
    if digits < 1:
        raise ValueError("digits must be >= 1")
    ctx = PadicContext(p, digits)
    lhs = ctx.from_rational(2 * alt_harmonic_sum(p, n, r))
    rhs = main_congruence_series(p, n, r, ctx, digits, margin=margin)
    params = {"p": p, "n": n, "r": r, "M": digits}
    return padic_report("theorem6", params, lhs, rhs, digits)


# Fixed evaluation points for the p-independent identity suites.
DISTRIBUTION_POINTS = (
    Fraction(0),
    Fraction(1, 2),
    Fraction(1, 3),
    Fraction(-2, 7),
    Fraction(5, 4),
)
DISTRIBUTION_MODULI = (1, 3, 5, 7)
POWER_SUM_EXPONENTS = tuple(range(9))


@dataclass(frozen=True)
class GridConfig:
    """Parameter grid for :func:`run_grid`; values are normalized to sorted
    deduplicated tuples so equal configs produce identical report streams."""

    primes: tuple[int, ...]
    r_values: tuple[int, ...]
    n_values: tuple[int, ...]
    precision: int
    output_format: str = "json"

    def __post_init__(self):
        object.__setattr__(self, "primes", tuple(sorted(set(self.primes))))
        object.__setattr__(self, "r_values", tuple(sorted(set(self.r_values))))
        object.__setattr__(self, "n_values", tuple(sorted(set(self.n_values))))
        for p in self.primes:
            if p < 3 or not is_prime(p):
                raise ValueError(f"primes must be odd primes, got {p}")
        for n in self.n_values:
            if n < 2 or n % 2:
                raise ValueError(f"n values must be even and >= 2, got {n}")
        for r in self.r_values:
            if r < 1:
                raise ValueError(f"r values must be >= 1, got {r}")
        if self.precision < 1:
            raise ValueError("precision must be >= 1")
        if self.output_format not in ("json", "csv"):
            raise ValueError(f"unknown output format: {self.output_format!r}")


def distribution_report(n: int, f: int, x: Fraction) -> CongruenceReport:
    """Both sides of the distribution identity for E_n at x, exactly."""
    x = Fraction(x)
    lhs = euler_polynomial_value(n, x)
    rhs = Fraction(f) ** n * sum(
        ((-1) ** a) * euler_polynomial_value(n, (x + a) / f) for a in range(f)
    )
    params = {"n": n, "f": f, "x": format_rational(x)}
    return rational_report("distribution", params, lhs, rhs)


def power_sum_report(n: int, m: int) -> CongruenceReport:
    """Direct alternating power sum against its closed form (even n)."""
    lhs = alternating_power_sum(n, m)
    rhs = alternating_power_sum_closed(n, m)
    return rational_report("powersum", {"n": n, "m": m}, lhs, rhs)


def binomial_ratio_report(r: int, k: int) -> CongruenceReport:
    """(r/(r+k)) C(-r-1, k) = C(-r, k), exactly."""
    lhs = Fraction(r, r + k) * binomial(-r - 1, k)
    rhs = Fraction(binomial(-r, k))
    return rational_report("binomial", {"r": r, "k": k, "identity": "ratio"}, lhs, rhs)


def binomial_product_report(r: int, k: int, j: int) -> CongruenceReport:
    """C(-r, k) C(-r-k, j) = C(-r, k+j) C(k+j, j), exactly."""
    lhs = binomial(-r, k) * binomial(-r - k, j)
    rhs = binomial(-r, k + j) * binomial(k + j, j)
    params = {"r": r, "k": k, "j": j, "identity": "product"}
    return rational_report("binomial", params, lhs, rhs)


def _grid_jobs(config: GridConfig, margin: int):
    M = config.precision
    jobs = []
    for p in config.primes:
        for r in config.r_values:
            for n in config.n_values:
                jobs.append(
                    lambda p=p, n=n, r=r: verify_main_congruence(
                        p, n, r, M, margin=margin
                    )
                )
    for p in config.primes:
        ctx = PadicContext(p, M)
        for n in config.n_values:
            for t in range(p - 1):
                jobs.append(
                    lambda n=n, t=t, ctx=ctx: interpolation_check(
                        n, teichmuller_power(t, ctx), ctx, M, margin=margin
                    )
                )
    for p in config.primes:
        ctx = PadicContext(p, M)
        for k in config.r_values:
            jobs.append(lambda k=k, ctx=ctx: kummer_check(k, 0, ctx, margin=margin))
    for n in config.n_values:
        for f in DISTRIBUTION_MODULI:
            for x in DISTRIBUTION_POINTS:
                jobs.append(lambda n=n, f=f, x=x: distribution_report(n, f, x))
    for n in config.n_values:
        for m in POWER_SUM_EXPONENTS:
            jobs.append(lambda n=n, m=m: power_sum_report(n, m))
    for r in config.r_values:
        for k in config.r_values:
            jobs.append(lambda r=r, k=k: binomial_ratio_report(r, k))
            for j in config.r_values:
                jobs.append(lambda r=r, k=k, j=j: binomial_product_report(r, k, j))
    return jobs


def run_grid(
    config: GridConfig, *, threads: int = 1, margin: int = 0
) -> list[CongruenceReport]:
    """Every check suite over the configured grid, in canonical order.

    Grid points are independent; with threads > 1 they are evaluated in a
    thread pool, but reports always come back in canonical parameter order,
    so the serialized output is identical for any thread count.
    """
    jobs = _grid_jobs(config, margin)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda job: job(), jobs))
    return [job() for job in jobs]
