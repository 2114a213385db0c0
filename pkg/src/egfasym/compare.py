"""Exact-vs-closed-form comparison rows and empirical error-order fits."""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import mpmath
from mpmath import mpf

from egfasym.a000898 import A000898, closed_form_estimate
from egfasym.egf import render_int_scientific, terms_at
from egfasym.errors import DomainError, EgfError
from egfasym.numerics import LnValue, PrecisionContext, render_ln_scientific

__all__ = [
    "ComparisonRow",
    "ErrorOrderFit",
    "DegenerateFitError",
    "DEFAULT_N_LIST",
    "DEFAULT_MAX_N",
    "compare_rows",
    "fit_error_order",
    "fit_rows",
]

DEFAULT_N_LIST = (10**2, 10**3, 10**4, 10**5)
DEFAULT_MAX_N = 2 * 10**5


class DegenerateFitError(EgfError, ArithmeticError):
    """Too few nonzero errors to fit a slope."""


@dataclass(frozen=True)
class ComparisonRow:
    n: int
    exact_str: str
    estimate_str: str
    ln_exact: mpf
    ln_estimate: mpf
    ratio_minus_one: mpf  # I*/I - 1
    scaled_error: mpf  # (I*/I - 1) n

    def as_strings(self, sig: int = 12) -> dict[str, str]:
        """Field-name -> string mapping shared by the CSV and JSON writers."""
        return {
            "n": str(self.n),
            "exact": self.exact_str,
            "estimate": self.estimate_str,
            "ratio_minus_one": mpmath.nstr(self.ratio_minus_one, sig),
            "scaled_error": mpmath.nstr(self.scaled_error, sig),
        }


@dataclass(frozen=True)
class ErrorOrderFit:
    rows: tuple[ComparisonRow, ...]
    slope: float
    intercept: float


def _check_n_list(n_list: Sequence[int], max_n: Optional[int]) -> list[int]:
    ns = sorted(set(int(n) for n in n_list))
    if not ns:
        raise DomainError("empty n list")
    if ns[0] < 1:
        raise DomainError(f"every n must be >= 1, got {ns[0]}")
    if max_n is not None and ns[-1] > max_n:
        raise DomainError(
            f"n={ns[-1]} exceeds the cap of {max_n} (raise it with --max-n)"
        )
    return ns


def compare_rows(
    n_list: Iterable[int] = DEFAULT_N_LIST,
    digits: int = 5,
    ctx: Optional[PrecisionContext] = None,
    max_n: Optional[int] = DEFAULT_MAX_N,
) -> list[ComparisonRow]:
    """Exact A000898 terms against the corrected closed form, ascending n.

    One pass of the exact recurrence up to max(n) serves every row.
    """
    ctx = ctx or PrecisionContext()
    ns = _check_n_list(list(n_list), max_n)
    exact = terms_at(A000898, ns)
    rows = []
    for n in ns:
        ln_exact = LnValue.from_int(exact[n], ctx)
        est = closed_form_estimate(n, True, ctx).value
        with ctx.workprec():
            rm1 = est.ratio_minus_one(ln_exact)
            scaled = rm1 * n
        rows.append(
            ComparisonRow(
                n=n,
                exact_str=render_int_scientific(exact[n], digits),
                estimate_str=render_ln_scientific(est, digits, ctx),
                ln_exact=ln_exact.ln,
                ln_estimate=est.ln,
                ratio_minus_one=ctx.round(rm1),
                scaled_error=ctx.round(scaled),
            )
        )
    return rows


def fit_rows(rows: Sequence[ComparisonRow]) -> ErrorOrderFit:
    """Least-squares line through (ln n, ln |I*/I - 1|)."""
    usable = [r for r in rows if r.ratio_minus_one != 0]
    if len(usable) < 3:
        raise DegenerateFitError(
            f"need >= 3 rows with nonzero error, have {len(usable)}"
        )
    xs = [math.log(r.n) for r in usable]
    ys = [float(mpmath.log(abs(r.ratio_minus_one))) for r in usable]
    slope, intercept = statistics.linear_regression(xs, ys)
    return ErrorOrderFit(tuple(rows), slope, intercept)


def fit_error_order(
    n_list: Sequence[int],
    ctx: Optional[PrecisionContext] = None,
    max_n: Optional[int] = DEFAULT_MAX_N,
) -> ErrorOrderFit:
    """Fit the decay exponent of the closed-form relative error.

    Needs at least three distinct n spanning a factor of ten or more.
    """
    distinct = sorted(set(n_list))
    if len(distinct) < 3:
        raise DomainError(f"need >= 3 distinct n, got {len(distinct)}")
    if distinct[-1] < 10 * distinct[0]:
        raise DomainError("n values must span at least one decade")
    return fit_rows(compare_rows(distinct, 5, ctx, max_n))
