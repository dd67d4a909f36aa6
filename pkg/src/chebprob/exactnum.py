"""Exact combinatorial primitives: binomials, Catalan and ballot numbers,
and sequence convolution.

All arithmetic here is exact.  Plain ``int`` is the arbitrary-precision
integer and :class:`fractions.Fraction` the exact rational (always stored
normalized with positive denominator); sequences are ordinary lists indexed
from 0.  Everything returned by this module is a plain immutable value, safe
to share between threads.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence, Union

Rational = Union[int, Fraction]

__all__ = [
    "Rational",
    "binomial",
    "catalan_number",
    "catalan_sequence",
    "ballot_number",
    "convolve",
    "convolution_power",
    "format_rational",
]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the total convention: 0 outside 0 <= k <= n.

    Summation formulas downstream run their index over ranges that leave the
    triangle; the zero convention keeps them total.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan_number(n: int) -> int:
    """n-th Catalan number C_n = binom(2n, n) / (n + 1), exactly."""
    if n < 0:
        raise ValueError(f"catalan_number requires n >= 0, got n={n}")
    return math.comb(2 * n, n) // (n + 1)


def catalan_sequence(count: int) -> list[int]:
    """First ``count`` Catalan numbers [C_0, ..., C_{count-1}]."""
    if count < 1:
        raise ValueError(f"catalan_sequence requires count >= 1, got {count}")
    out = [1]
    for n in range(count - 1):
        # C_{n+1} = C_n * 2(2n+1)/(n+2); the division is exact.
        out.append(out[-1] * 2 * (2 * n + 1) // (n + 2))
    return out


def ballot_number(n: int, k: int) -> int:
    """Ballot number binom(n, k) - binom(n, k-1) (Catalan-triangle entry).

    Uses the total binomial convention, so the value is defined for any
    integer k and may be negative outside the triangle.
    """
    return binomial(n, k) - binomial(n, k - 1)


def convolve(
    a: Sequence[Rational], b: Sequence[Rational], length: int | None = None
) -> list[Rational]:
    """Convolution c_n = sum_j a_j * b_{n-j}.

    The full result has length len(a) + len(b) - 1.  When the inputs are
    prefixes of longer sequences only the first min(len(a), len(b)) entries
    are meaningful; pass ``length`` to truncate to the range you trust.
    """
    if not a or not b:
        raise ValueError("convolve requires nonempty sequences")
    full = len(a) + len(b) - 1
    n_out = full if length is None else min(length, full)
    out: list[Rational] = [0] * n_out
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        top = min(len(b), n_out - i)
        for j in range(top):
            out[i + j] += ai * b[j]
    return out


def convolution_power(
    a: Sequence[Rational], N: int, length: int | None = None
) -> list[Rational]:
    """N-fold self-convolution of ``a`` (N >= 1), by repeated squaring.

    Exact arithmetic makes the squaring route agree term-for-term with
    iterated :func:`convolve`.  ``length`` truncates as in :func:`convolve`.
    """
    if not a:
        raise ValueError("convolution_power requires a nonempty sequence")
    if N < 1:
        raise ValueError(f"convolution_power requires N >= 1, got N={N}")
    full = N * (len(a) - 1) + 1
    cap = full if length is None else min(length, full)
    result: list[Rational] | None = None
    base = list(a)
    n = N
    while n:
        if n & 1:
            result = base[:cap] if result is None else convolve(result, base, cap)
        n >>= 1
        if n:
            base = convolve(base, base, cap)
    assert result is not None
    return result[:cap]


def format_rational(x: Rational) -> str:
    """Render an exact value as "num/den", omitting "/den" when den == 1."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"
