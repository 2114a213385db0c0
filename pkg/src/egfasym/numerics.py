"""High-precision reals, log-domain values and their decimal rendering.

Everything here runs on mpmath.  Precision is always passed in as a
:class:`PrecisionContext`; functions enter ``mpmath.workprec`` locally
instead of touching ``mpmath.mp.prec``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable, Optional

import mpmath
from mpmath import mpf

from egfasym.egf import format_mantissa
from egfasym.errors import DomainError, PrecisionError

__all__ = [
    "PrecisionContext",
    "LnValue",
    "DEFAULT_BITS",
    "MAX_BITS",
    "ln_factorial",
    "render_ln_scientific",
]

DEFAULT_BITS = 256
MAX_BITS = 4096
AUDIT_EXTRA_BITS = 64


@dataclass(frozen=True)
class PrecisionContext:
    """Target mantissa precision ``bits``; intermediates use ``bits + guard``."""

    bits: int = DEFAULT_BITS
    guard: int = 32

    def __post_init__(self) -> None:
        if self.bits < 64:
            raise DomainError(f"bits must be >= 64, got {self.bits}")
        if self.guard < 0:
            raise DomainError(f"guard must be >= 0, got {self.guard}")

    @property
    def working(self) -> int:
        return self.bits + self.guard

    def workprec(self):
        """Context manager that sets mpmath to the working precision."""
        return mpmath.workprec(self.working)

    def round(self, x) -> mpf:
        """Round ``x`` to the target precision."""
        with mpmath.workprec(self.bits):
            return +mpf(x)

    def with_bits(self, bits: int) -> "PrecisionContext":
        return replace(self, bits=bits)

    def eps(self, scale: int = 0) -> mpf:
        """2**(scale - bits)."""
        return mpmath.ldexp(mpf(1), scale - self.bits)


@dataclass(frozen=True)
class LnValue:
    """A positive quantity stored as its natural logarithm.

    ``source``, when set, recomputes ``ln`` under another context; rendering
    uses it to audit the printed digits at higher precision.
    """

    ln: mpf
    bits: int = DEFAULT_BITS
    source: Optional[Callable[[PrecisionContext], mpf]] = field(
        default=None, compare=False, repr=False
    )

    def __post_init__(self) -> None:
        if not mpmath.isfinite(self.ln):
            raise DomainError(f"log-domain value must be finite, got {self.ln}")

    @classmethod
    def from_int(cls, x: int, ctx: PrecisionContext) -> "LnValue":
        if x <= 0:
            raise DomainError(f"x must be positive, got {x}")

        def source(c: PrecisionContext) -> mpf:
            with c.workprec():
                return mpmath.log(mpf(x))

        return cls(source(ctx), ctx.bits, source)

    def __mul__(self, other: "LnValue") -> "LnValue":
        return LnValue(self.ln + other.ln, min(self.bits, other.bits))

    def __truediv__(self, other: "LnValue") -> "LnValue":
        return LnValue(self.ln - other.ln, min(self.bits, other.bits))

    def __pow__(self, k) -> "LnValue":
        return LnValue(self.ln * k, self.bits)

    def log10(self) -> mpf:
        return self.ln / mpmath.log(10)

    def ratio_minus_one(self, other: "LnValue") -> mpf:
        """self/other - 1 without leaving the log domain."""
        return mpmath.expm1(self.ln - other.ln)

    def render(self, digits: int, ctx: Optional[PrecisionContext] = None) -> str:
        return render_ln_scientific(self, digits, ctx)

    def __str__(self) -> str:
        return self.render(6)


@lru_cache(maxsize=64)
def _ln_factorial(n: int, bits: int, guard: int) -> mpf:
    ctx = PrecisionContext(bits, guard)
    with ctx.workprec():
        value = mpmath.log(mpf(math.factorial(n)))
    return ctx.round(value)


def ln_factorial(n: int, ctx: PrecisionContext) -> mpf:
    """ln(n!) from the exact integer n!, correct to the target precision."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    return _ln_factorial(n, ctx.bits, ctx.guard)


def _render_once(ln: mpf, digits: int, prec: int) -> str:
    with mpmath.workprec(prec):
        L = ln / mpmath.log(10)
        E = int(mpmath.floor(L))
        scaled = mpmath.power(10, (L - E) + (digits - 1))
        q = int(mpmath.floor(scaled))
        rem = scaled - q
        half = mpf(0.5)
        if rem > half or (rem == half and q % 2):
            q += 1
    if q >= 10**digits:
        q //= 10
        E += 1
    return format_mantissa(q, digits, E)


def render_ln_scientific(
    v: LnValue, digits: int, ctx: Optional[PrecisionContext] = None
) -> str:
    """Render exp(v.ln) as ``m.ddde+E`` with round-half-even.

    The string is recomputed with 64 more bits (re-deriving ``v.ln`` via
    ``v.source`` when available); on disagreement precision is doubled, up
    to 4096 bits, before giving up with :class:`PrecisionError`.
    """
    if digits < 1:
        raise DomainError(f"digits must be >= 1, got {digits}")
    if ctx is None:
        ctx = PrecisionContext(max(v.bits, 64))

    def ln_at(c: PrecisionContext) -> mpf:
        return v.source(c) if v.source is not None else v.ln

    while True:
        first = _render_once(ln_at(ctx), digits, ctx.working)
        hi = ctx.with_bits(ctx.bits + AUDIT_EXTRA_BITS)
        second = _render_once(ln_at(hi), digits, hi.working)
        if first == second:
            return first
        if ctx.bits * 2 > MAX_BITS:
            raise PrecisionError(
                f"cannot certify {digits} digits at {ctx.bits} bits: "
                f"{first!r} vs {second!r}"
            )
        ctx = ctx.with_bits(ctx.bits * 2)
