"""Closed-form asymptotics for OEIS A000898, whose EGF is exp(z^2 + 2z).

Here a(r) = 2r^2 + 2r, so the saddle point is explicit and the Hayman
estimate collapses, after Stirling, to

    I_n* = e^sqrt(2n) / sqrt(2e) * (2n/e)^(n/2) * (1 + sqrt(2) / (3 sqrt(n))).
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
from mpmath import mpf

from egfasym.egf import ExactSequence, ExpPolynomial
from egfasym.errors import DomainError
from egfasym.numerics import LnValue, PrecisionContext

__all__ = [
    "A000898",
    "ExpansionReport",
    "ClosedFormEstimate",
    "rn_closed",
    "rn_expansion",
    "expansion_report",
    "closed_form_estimate",
    "recurrence_a000898",
    "iter_a000898",
]

A000898 = ExpPolynomial((0, 2, 1))

EXPANSION_MIN_N = 10


def _check_n(n: int, minimum: int = 1) -> None:
    if n < minimum:
        raise DomainError(f"n must be >= {minimum}, got {n}")


def rn_closed(n: int, ctx: PrecisionContext) -> mpf:
    """(sqrt(2n+1) - 1) / 2, the root of 2r^2 + 2r = n."""
    _check_n(n)
    with ctx.workprec():
        return (mpmath.sqrt(2 * mpf(n) + 1) - 1) / 2


def rn_expansion(n: int, ctx: PrecisionContext) -> mpf:
    """Three-term expansion sqrt(n/2) - 1/2 + 1/(4 sqrt(2n)); error O(n^-3/2)."""
    _check_n(n)
    with ctx.workprec():
        n = mpf(n)
        return mpmath.sqrt(n / 2) - mpf(1) / 2 + 1 / (4 * mpmath.sqrt(2 * n))


@dataclass(frozen=True)
class ExpansionReport:
    """Direct vs truncated values of ln f(r_n), n ln r_n and sqrt(b(r_n))."""

    n: int
    direct_ln_f: mpf
    approx_ln_f: mpf
    direct_n_ln_r: mpf
    approx_n_ln_r: mpf
    direct_sqrt_b: mpf
    approx_sqrt_b: mpf

    @property
    def remainder_ln_f(self) -> mpf:
        return self.direct_ln_f - self.approx_ln_f

    @property
    def remainder_n_ln_r(self) -> mpf:
        return self.direct_n_ln_r - self.approx_n_ln_r

    @property
    def remainder_sqrt_b(self) -> mpf:
        return self.direct_sqrt_b - self.approx_sqrt_b

    @property
    def relative_remainder_sqrt_b(self) -> mpf:
        return self.direct_sqrt_b / self.approx_sqrt_b - 1

    @property
    def remainders(self) -> tuple[mpf, mpf, mpf]:
        return (self.remainder_ln_f, self.remainder_n_ln_r, self.remainder_sqrt_b)


def expansion_report(n: int, ctx: PrecisionContext) -> ExpansionReport:
    _check_n(n, EXPANSION_MIN_N)
    r = rn_closed(n, ctx)
    with ctx.workprec():
        N = mpf(n)
        s2n = mpmath.sqrt(2 * N)
        half_n = mpmath.sqrt(N / 2)
        return ExpansionReport(
            n=n,
            direct_ln_f=r * r + 2 * r,
            approx_ln_f=N / 2 + half_n - mpf(1) / 2 + mpmath.log1p(1 / (4 * s2n)),
            direct_n_ln_r=N * mpmath.log(r),
            approx_n_ln_r=N * mpmath.log(half_n) - half_n + 1 / (12 * s2n),
            direct_sqrt_b=mpmath.sqrt(4 * r * r + 2 * r),
            approx_sqrt_b=s2n * (1 - 1 / (2 * s2n)),
        )


@dataclass(frozen=True)
class ClosedFormEstimate:
    n: int
    with_correction: bool
    value: LnValue


def _closed_form_ln(n: int, with_correction: bool, ctx: PrecisionContext) -> mpf:
    with ctx.workprec():
        N = mpf(n)
        ln = (
            mpmath.sqrt(2 * N)
            - mpmath.log(2 * mpmath.e) / 2
            + (N / 2) * (mpmath.log(2 * N) - 1)
        )
        if with_correction:
            ln += mpmath.log1p(mpmath.sqrt(2) / (3 * mpmath.sqrt(N)))
    return ln


def closed_form_estimate(
    n: int, with_correction: bool = True, ctx: PrecisionContext | None = None
) -> ClosedFormEstimate:
    """I_n* in the log domain, with or without the 1 + sqrt(2)/(3 sqrt n) factor."""
    _check_n(n)
    ctx = ctx or PrecisionContext()

    def source(c: PrecisionContext) -> mpf:
        return _closed_form_ln(n, with_correction, c)

    value = LnValue(ctx.round(source(ctx)), ctx.bits, source)
    return ClosedFormEstimate(n, with_correction, value)


def iter_a000898():
    """I_0, I_1, ... from I_n = 2 (I_{n-1} + (n-1) I_{n-2})."""
    prev, cur = 1, 2
    yield prev
    yield cur
    n = 2
    while True:
        prev, cur = cur, 2 * (cur + (n - 1) * prev)
        yield cur
        n += 1


def recurrence_a000898(N: int) -> ExactSequence:
    """The hand-written two-term recurrence, kept separate from the generic engine."""
    if N < 0:
        raise DomainError(f"N must be >= 0, got {N}")
    it = iter_a000898()
    return ExactSequence(A000898, tuple(next(it) for _ in range(N + 1)))
