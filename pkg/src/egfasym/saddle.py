"""Hayman saddle-point estimates for f(z) = exp(P(z)).

For f = exp(P) the saddle functions are polynomials,

    a(r) = r (log f)'(r) = sum j p_j r^j
    b(r) = r a'(r)       = sum j^2 p_j r^j

and the coefficient estimate is

    ln a_n ~ P(r_n) - n ln r_n - 1/2 ln(2 pi b(r_n)),   a(r_n) = n,

evaluated entirely in the log domain.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
from mpmath import mpf

from egfasym.egf import ExpPolynomial
from egfasym.errors import ConvergenceError, DomainError
from egfasym.numerics import LnValue, PrecisionContext, ln_factorial

__all__ = [
    "SaddlePoint",
    "HaymanEstimate",
    "p_of_r",
    "a_of_r",
    "b_of_r",
    "solve_saddle",
    "hayman_coefficient_estimate",
]

MAX_ITER = 400


@dataclass(frozen=True)
class SaddlePoint:
    n: int
    r: mpf
    residual: mpf  # a(r) - n
    iterations: int = 0


@dataclass(frozen=True)
class HaymanEstimate:
    n: int
    saddle: SaddlePoint
    ln_coefficient: LnValue  # estimate of a_n = I_n / n!
    ln_count: LnValue  # estimate of I_n
    ln_f: mpf  # P(r_n)
    n_ln_r: mpf
    b: mpf
    # Raw saddle-point estimates are low by this factor for periodic P
    # (e.g. exp(z^2)); no correction is applied.
    period: int = 1


def _horner(weights, r) -> mpf:
    acc = mpf(0)
    for w in reversed(weights):
        acc = acc * r + w
    return acc


def p_of_r(P: ExpPolynomial, r) -> mpf:
    """P(r), i.e. ln f(r)."""
    return _horner(P.coeffs, mpf(r))


def a_of_r(P: ExpPolynomial, r) -> mpf:
    """a(r) = r P'(r) = sum j p_j r^j."""
    return _horner([j * p for j, p in enumerate(P.coeffs)], mpf(r))


def b_of_r(P: ExpPolynomial, r) -> mpf:
    """b(r) = r a'(r) = sum j^2 p_j r^j."""
    return _horner([j * j * p for j, p in enumerate(P.coeffs)], mpf(r))


def solve_saddle(P: ExpPolynomial, n: int, ctx: PrecisionContext) -> SaddlePoint:
    """Positive root of a(r) = n.

    Starts from the leading-term guess (n / (d p_d))^(1/d), brackets the root
    by doubling/halving, then runs Newton steps that fall back to bisection
    whenever a step would leave the bracket.  ``r`` is returned at the
    working precision; the residual satisfies |a(r) - n| <= 2^(4-bits) n.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    with ctx.workprec():
        target = mpf(n)
        tol = ctx.eps(4) * target
        d = P.degree
        r = mpmath.root(target / (d * P.leading), d)
        lo = hi = r
        while a_of_r(P, hi) < target:
            hi *= 2
        while a_of_r(P, lo) > target:
            lo /= 2

        stop = mpmath.ldexp(tol, -ctx.guard // 2)
        for it in range(1, MAX_ITER + 1):
            f = a_of_r(P, r) - target
            if abs(f) <= stop:
                break
            if f < 0:
                lo = r
            else:
                hi = r
            # a'(r) = b(r) / r
            step = f * r / b_of_r(P, r)
            candidate = r - step
            if not (lo < candidate < hi):
                candidate = (lo + hi) / 2
            if candidate == r:
                break
            r = candidate
        residual = a_of_r(P, r) - target
    if not abs(residual) <= tol:
        raise ConvergenceError(
            f"saddle for n={n} did not converge: bracket [{mpmath.nstr(lo, 20)}, "
            f"{mpmath.nstr(hi, 20)}], residual {mpmath.nstr(residual, 5)}"
        )
    return SaddlePoint(n, r, residual, it)


def _hayman_ln_parts(P: ExpPolynomial, n: int, ctx: PrecisionContext):
    sp = solve_saddle(P, n, ctx)
    with ctx.workprec():
        r = sp.r
        ln_f = p_of_r(P, r)
        n_ln_r = n * mpmath.log(r)
        b = b_of_r(P, r)
        ln_coef = ln_f - n_ln_r - mpmath.log(2 * mpmath.pi * b) / 2
        ln_count = ln_coef + ln_factorial(n, ctx)
    return sp, ln_f, n_ln_r, b, ln_coef, ln_count


def hayman_coefficient_estimate(
    P: ExpPolynomial, n: int, ctx: PrecisionContext
) -> HaymanEstimate:
    """Saddle-point estimate of a_n and of I_n = n! a_n (exact n!)."""
    sp, ln_f, n_ln_r, b, ln_coef, ln_count = _hayman_ln_parts(P, n, ctx)

    def coef_source(c: PrecisionContext) -> mpf:
        return _hayman_ln_parts(P, n, c)[4]

    def count_source(c: PrecisionContext) -> mpf:
        return _hayman_ln_parts(P, n, c)[5]

    return HaymanEstimate(
        n=n,
        saddle=sp,
        ln_coefficient=LnValue(ctx.round(ln_coef), ctx.bits, coef_source),
        ln_count=LnValue(ctx.round(ln_count), ctx.bits, count_source),
        ln_f=ctx.round(ln_f),
        n_ln_r=ctx.round(n_ln_r),
        b=ctx.round(b),
        period=P.period,
    )
