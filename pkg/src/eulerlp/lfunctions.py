"""Generalized Euler numbers, p-adic partial zeta values, and the p-adic
l-function at integer arguments.

The p-adic partial zeta is the series

    (-1)^a / 2 * <a>^{-s} * sum_{j >= 0} C(-s, j) (F/a)^j E_j

for an odd multiple F of p and a unit a, and the l-function is

    l_p(s, chi) = 2 sum_{a=1, (a,p)=1}^{F} chi(a) H_p(s, a | F).

Because p divides F and every E_j is p-integral, the j-th series term has
valuation at least j, so truncating at the target precision is exact at
that precision.  Only integer s is supported: unit powers <a>^{-s} are then
exact and no Mahler-series precision bookkeeping is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .characters import DirichletCharacter, teichmuller_power
from .euler import euler_number, euler_polynomial_value, partial_zeta_neg
from .padic import PadicContext, PadicNumber, angle, binomial, teichmuller
from .reports import CongruenceReport, padic_report


@dataclass(frozen=True)
class TruncationPlan:
    """Target precision M and series cutoff J for the defining series.

    J >= M suffices for results exact mod p^M, since term j carries
    valuation >= j.  The default is the tight cutoff J = M; a larger J must
    never change any reported residue.
    """

    target_precision: int
    series_cutoff: int | None = None

    def __post_init__(self):
        if self.target_precision < 1:
            raise ValueError("target_precision must be >= 1")
        if self.series_cutoff is None:
            object.__setattr__(self, "series_cutoff", self.target_precision)
        if self.series_cutoff < self.target_precision:
            raise ValueError("series_cutoff must be >= target_precision")


def generalized_euler_number(
    n: int, chi: DirichletCharacter, ctx: PadicContext
) -> PadicNumber:
    """E_{n,chi} = f^n sum_{a=0}^{f-1} chi(a) (-1)^a E_n(a/f), f = conductor.

    The scaled values f^n E_n(a/f) clear every power of f from the
    denominators, leaving powers of two, so the sum embeds in Z_p for any
    odd p.  For the trivial character this is just E_n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    f = chi.conductor
    if f % 2 == 0:
        raise ValueError("conductor must be odd")
    total = ctx.zero()
    for a in range(f):
        chi_a = chi(a)
        if chi_a.is_zero:
            continue
        scaled = Fraction(f) ** n * euler_polynomial_value(n, Fraction(a, f))
        sign = -1 if a % 2 else 1
        total = total + chi_a * ctx.from_rational(sign * scaled)
    return total


def l_at_negative_int(
    k: int, chi: DirichletCharacter, ctx: PadicContext
) -> PadicNumber:
    """Value of the alternating l-series at -k, which is exactly E_{k,chi}."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return generalized_euler_number(k, chi, ctx)


def _check_class_args(s_or_n, a: int, modulus: int, ctx: PadicContext) -> None:
    if modulus % ctx.p != 0 or modulus % 2 == 0:
        raise ValueError("modulus must be an odd multiple of p")
    if not 0 < a < modulus:
        raise ValueError("need 0 < a < modulus")
    if a % ctx.p == 0:
        raise ValueError("a must be a unit mod p")


def padic_partial_zeta(
    s: int, a: int, modulus: int, ctx: PadicContext, plan: TruncationPlan
) -> PadicNumber:
    """Series evaluation of the p-adic partial zeta H_p(s, a | modulus),
    correct mod p^target_precision.

    The (modulus/a)^j factor is computed as modulus^j times the j-th power
    of the unit inverse of a.
    """
    _check_class_args(s, a, modulus, ctx)
    if plan.target_precision > ctx.precision:
        raise ValueError("plan wants more digits than the context carries")
    ratio = ctx.from_int(modulus) * ctx.from_int(a).inverse()
    power = ctx.one()
    series = ctx.zero()
    for j in range(plan.series_cutoff):
        c = binomial(-s, j)
        if c:
            series = series + ctx.from_int(c) * power * ctx.from_rational(euler_number(j))
        power = power * ratio
    half = ctx.from_rational(Fraction(-1 if a % 2 else 1, 2))
    return (half * angle(a, ctx) ** (-s) * series).reduce(plan.target_precision)


def padic_partial_zeta_at_neg(
    n: int, a: int, modulus: int, ctx: PadicContext
) -> PadicNumber:
    """Closed form at s = -n: omega(a)^{-n} times the exact rational partial
    zeta value (-1)^a (modulus^n / 2) E_n(a/modulus), at full precision."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_class_args(-n, a, modulus, ctx)
    return teichmuller(a, ctx) ** (-n) * ctx.from_rational(
        partial_zeta_neg(n, a, modulus)
    )


def padic_l(
    s: int, chi: DirichletCharacter, ctx: PadicContext, plan: TruncationPlan
) -> PadicNumber:
    """l_p(s, chi) = 2 sum over units a mod p of chi(a) H_p(s, a | p).

    The summation modulus is fixed at p, which carries every supported
    Teichmuller-power character.
    """
    if ctx.p % chi.modulus != 0:
        raise ValueError(
            f"character modulus {chi.modulus} does not divide the summation "
            f"modulus {ctx.p}"
        )
    total = ctx.zero()
    for a in range(1, ctx.p):
        total = total + chi(a) * padic_partial_zeta(s, a, ctx.p, ctx, plan)
    return (2 * total).reduce(plan.target_precision)


def series_closed_check(
    n: int,
    a: int,
    ctx: PadicContext,
    digits: int,
    *,
    modulus: int | None = None,
    margin: int = 0,
) -> CongruenceReport:
    """Series evaluation at s = -n against the closed form, mod p^digits."""
    modulus = ctx.p if modulus is None else modulus
    plan = TruncationPlan(digits, digits + margin)
    lhs = padic_partial_zeta(-n, a, modulus, ctx, plan)
    rhs = padic_partial_zeta_at_neg(n, a, modulus, ctx)
    params = {"p": ctx.p, "n": n, "a": a, "F": modulus, "M": digits}
    return padic_report("series_closed", params, lhs, rhs, digits)


def interpolation_check(
    n: int, chi: DirichletCharacter, ctx: PadicContext, digits: int, *, margin: int = 0
) -> CongruenceReport:
    """Compare l_p(-n, chi) against (1 - p^n chi_n(p)) E_{n, chi_n}, where
    chi_n is chi twisted by omega^{-n}.

    A mismatch is a report outcome, not an exception.  chi_n(p) is 1 for
    conductor 1 and 0 otherwise, which is exactly what makes the factor
    collapse correctly in both regimes.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    plan = TruncationPlan(digits, digits + margin)
    lhs = padic_l(-n, chi, ctx, plan)
    chi_n = chi.twist(-n)
    factor = ctx.one() - ctx.from_int(ctx.p) ** n * chi_n(ctx.p)
    rhs = factor * generalized_euler_number(n, chi_n, ctx)
    params = {"p": ctx.p, "n": n, "t": chi.teich_exponent, "M": digits}
    return padic_report("interpolation", params, lhs, rhs, digits)


def kummer_check(
    k: int, t: int, ctx: PadicContext, k2: int | None = None, *, margin: int = 0
) -> CongruenceReport:
    """l_p(k, w^t) against l_p(k2, w^t) mod p, for t = 0 mod p-1.

    k2 defaults to k + p; any pair of arguments may be supplied, since for
    such t the function is constant mod p.
    """
    p = ctx.p
    if t % (p - 1) != 0:
        raise ValueError("the congruence needs t = 0 mod p-1")
    if k2 is None:
        k2 = k + p
    chi = teichmuller_power(t, ctx)
    plan = TruncationPlan(1, 1 + margin)
    lhs = padic_l(k, chi, ctx, plan)
    rhs = padic_l(k2, chi, ctx, plan)
    params = {"p": p, "k": k, "k2": k2, "t": t, "M": 1}
    return padic_report("kummer", params, lhs, rhs, 1)
