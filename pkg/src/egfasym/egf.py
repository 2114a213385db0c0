"""Exact coefficients of exponential generating functions exp(P(z)).

If f(z) = exp(P(z)) = sum I_n z^n / n!, then f' = P' f gives

    I_n = sum_{j=1..d} j p_j (n-1)(n-2)...(n-j+1) I_{n-j}

which is what :func:`iter_terms` runs.  :func:`series_exp_oracle` gets the
same numbers by a different route (sum of P^k / k! over the rationals) and
exists only to check the recurrence.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from egfasym.errors import DomainError, ParseError

__all__ = [
    "ExpPolynomial",
    "ExactSequence",
    "parse_poly",
    "iter_terms",
    "exact_terms",
    "terms_at",
    "series_exp_oracle",
    "render_int_scientific",
    "format_mantissa",
]


@dataclass(frozen=True)
class ExpPolynomial:
    """Integer polynomial P(z) = sum p_j z^j, the exponent of the EGF.

    ``coeffs[j]`` is p_j, ascending.  Trailing zeros are stripped, so
    ``degree`` is the index of the last entry.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = list(self.coeffs)
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise DomainError(f"coefficients must be integers, got {c!r}")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 2:
            raise DomainError("degree must be >= 1 (P is constant)")
        if coeffs[0] != 0:
            raise DomainError(f"constant term p_0 must be 0, got {coeffs[0]}")
        negative = [j for j, c in enumerate(coeffs) if c < 0]
        if negative:
            j = negative[0]
            raise DomainError(f"coefficients must be nonnegative, p_{j} = {coeffs[j]}")
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    @property
    def period(self) -> int:
        """gcd of the exponents present in P; I_n = 0 unless period | n."""
        return math.gcd(*(j for j, _ in self.nonzero()))

    def nonzero(self) -> list[tuple[int, int]]:
        """(j, p_j) pairs with p_j != 0."""
        return [(j, c) for j, c in enumerate(self.coeffs) if c]

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __str__(self) -> str:
        parts = []
        for j in range(self.degree, 0, -1):
            c = self.coeffs[j]
            if not c:
                continue
            mono = "z" if j == 1 else f"z^{j}"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


@dataclass(frozen=True)
class ExactSequence:
    """Terms I_0..I_N of exp(P(z)) together with the polynomial that made them."""

    poly: ExpPolynomial
    terms: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, n: int) -> int:
        return self.terms[n]

    @property
    def N(self) -> int:
        return len(self.terms) - 1

    def check_recurrence(self) -> bool:
        """Re-verify every term against the falling-factorial recurrence."""
        if not self.terms or self.terms[0] != 1:
            return False
        for n in range(1, len(self.terms)):
            if self.terms[n] != _recurrence_rhs(self.poly, n, self.terms):
                return False
        return True

    def to_lines(self) -> str:
        """Tab-separated ``n<TAB>I_n`` export, one term per line."""
        return "".join(f"{n}\t{t}\n" for n, t in enumerate(self.terms))


def parse_poly(text: str) -> ExpPolynomial:
    """Parse an ascending comma-separated coefficient list such as ``"0,2,1"``."""
    fields = [f.strip() for f in text.split(",")]
    if not text.strip() or any(f == "" for f in fields):
        raise ParseError(f"empty coefficient in {text!r}")
    coeffs = []
    for f in fields:
        try:
            coeffs.append(int(f, 10))
        except ValueError:
            raise ParseError(f"not an integer coefficient: {f!r}") from None
    return ExpPolynomial(tuple(coeffs))


def _recurrence_rhs(poly: ExpPolynomial, n: int, terms: Sequence[int]) -> int:
    # straightforward evaluation, used only for re-checking
    total = 0
    for j, p in poly.nonzero():
        if j > n:
            break
        total += j * p * math.perm(n - 1, j - 1) * terms[n - j]
    return total


def iter_terms(poly: ExpPolynomial) -> Iterator[int]:
    """Yield I_0, I_1, ... indefinitely, keeping only the last ``degree`` terms."""
    d = poly.degree
    # weights[j-1] = j * p_j
    weights = [j * p for j, p in enumerate(poly.coeffs)][1:]
    window: deque[int] = deque([1], maxlen=d)  # window[-k] = I_{n-k}
    yield 1
    n = 1
    while True:
        total = 0
        falling = 1  # (n-1)(n-2)...(n-j+1)
        for j in range(1, min(d, n) + 1):
            if j > 1:
                falling *= n - j + 1
            w = weights[j - 1]
            if w:
                total += (w * falling) * window[-j]
        window.append(total)
        yield total
        n += 1


def exact_terms(poly: ExpPolynomial, N: int) -> ExactSequence:
    """I_0..I_N as exact integers.

    >>> exact_terms(parse_poly("0,2,1"), 5).terms
    (1, 2, 6, 20, 76, 312)
    """
    if N < 0:
        raise DomainError(f"N must be >= 0, got {N}")
    it = iter_terms(poly)
    return ExactSequence(poly, tuple(next(it) for _ in range(N + 1)))


def terms_at(poly: ExpPolynomial, indices: Iterable[int]) -> dict[int, int]:
    """Exact I_n for selected n from a single pass up to ``max(indices)``.

    Memory stays O(degree) terms, which matters at n ~ 1e5 where a single
    term is ~100 kB.
    """
    wanted = set(indices)
    if not wanted:
        return {}
    if min(wanted) < 0:
        raise DomainError("indices must be >= 0")
    top = max(wanted)
    out = {}
    for n, t in enumerate(iter_terms(poly)):
        if n in wanted:
            out[n] = t
        if n == top:
            break
    return out


def series_exp_oracle(poly: ExpPolynomial, N: int) -> list[Fraction]:
    """Ordinary coefficients c_0..c_N of exp(P(z)) by direct exponentiation.

    Uses exp(P) = sum_k P^k / k!, truncated at degree N.  Because p_0 = 0,
    P^k starts at z^k, so k <= N suffices.  Powers of P are integer
    polynomials; division by k! happens once per coefficient.
    """
    if N < 0:
        raise DomainError(f"N must be >= 0, got {N}")
    p = list(poly.coeffs[: N + 1])
    out = [Fraction(0)] * (N + 1)
    power = [1] + [0] * N  # P^0
    for k in range(N + 1):
        fk = math.factorial(k)
        for i in range(k, N + 1):
            if power[i]:
                out[i] += Fraction(power[i], fk)
        nxt = [0] * (N + 1)
        for i in range(k, N + 1):
            if not power[i]:
                continue
            for j in range(1, min(len(p) - 1, N - i) + 1):
                nxt[i + j] += power[i] * p[j]
        power = nxt
    return out


def format_mantissa(q: int, digits: int, exponent: int) -> str:
    """``q`` holds exactly ``digits`` decimal digits; render as ``m.ddde+E``."""
    s = str(q)
    mant = s if digits == 1 else f"{s[0]}.{s[1:]}"
    sign = "+" if exponent >= 0 else "-"
    return f"{mant}e{sign}{abs(exponent)}"


def _round_half_even(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if 2 * r > den or (2 * r == den and q % 2):
        q += 1
    return q


def decimal_exponent(x: int) -> int:
    """floor(log10(x)) for a positive integer, without a full str() conversion."""
    k = int(x.bit_length() * math.log10(2))  # within 1 of the answer
    p = 10**k
    if x < p:
        return k - 1
    if x >= 10 * p:
        return k + 1
    return k


def render_int_scientific(x: int, digits: int) -> str:
    """Exact scientific rendering of a positive integer, round-half-even.

    >>> render_int_scientific(168992, 4)
    '1.690e+5'
    """
    if x <= 0:
        raise DomainError(f"x must be positive, got {x}")
    if digits < 1:
        raise DomainError(f"digits must be >= 1, got {digits}")
    E = decimal_exponent(x)
    shift = E + 1 - digits
    if shift > 0:
        q = _round_half_even(x, 10**shift)
    else:
        q = x * 10**-shift
    if q == 10**digits:
        q //= 10
        E += 1
    return format_mantissa(q, digits, E)
