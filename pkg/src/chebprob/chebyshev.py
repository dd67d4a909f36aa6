"""Chebyshev polynomials of the first and second kind with exact integer
coefficients, plus the reversed first-kind polynomial whose reciprocal series
drives everything downstream.

T_N is defined by T_N(cos t) = cos(N t) and computed here from the recurrence
T_0 = 1, T_1 = z, T_{n+1} = 2z T_n - T_{n-1}; U_N likewise with U_0 = 1,
U_1 = 2z.  The reversed polynomial is z^N T_N(1/z), i.e. the coefficient
vector of T_N read back to front; its constant term 2^{N-1} never vanishes,
so its reciprocal power series exists.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Rational

__all__ = [
    "DensePolynomial",
    "chebyshev_T",
    "chebyshev_U",
    "reversed_T",
    "derivative",
    "eval_float",
    "binet_T",
]


@dataclass(frozen=True)
class DensePolynomial:
    """Polynomial as a dense coefficient tuple, index = degree.

    The trailing coefficient is nonzero except for the zero polynomial,
    which is stored as the single coefficient 0.
    """

    coefficients: tuple[Fraction, ...]

    @classmethod
    def of(cls, values) -> "DensePolynomial":
        coeffs = [Fraction(v) for v in values]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            coeffs = [Fraction(0)]
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return len(self.coefficients) == 1 and self.coefficients[0] == 0

    def eval_exact(self, x: Rational) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


@functools.lru_cache(maxsize=None)
def chebyshev_T(N: int) -> DensePolynomial:
    """First-kind Chebyshev polynomial T_N, exact coefficients."""
    if N < 0:
        raise ValueError(f"chebyshev_T requires N >= 0, got N={N}")
    return _recurrence(N, u_kind=False)


@functools.lru_cache(maxsize=None)
def chebyshev_U(N: int) -> DensePolynomial:
    """Second-kind Chebyshev polynomial U_N, exact coefficients."""
    if N < 0:
        raise ValueError(f"chebyshev_U requires N >= 0, got N={N}")
    return _recurrence(N, u_kind=True)


def _recurrence(N: int, u_kind: bool) -> DensePolynomial:
    prev = [Fraction(1)]
    cur = [Fraction(0), Fraction(2 if u_kind else 1)]
    if N == 0:
        return DensePolynomial.of(prev)
    for _ in range(N - 1):
        nxt = [Fraction(0)] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return DensePolynomial.of(cur)


def reversed_T(N: int) -> DensePolynomial:
    """Coefficient reversal of T_N: the coefficient of z^j is the coefficient
    of z^{N-j} in T_N.  Its constant term is the leading 2^{N-1} of T_N."""
    if N < 1:
        raise ValueError(f"reversed_T requires N >= 1, got N={N}")
    return DensePolynomial.of(tuple(reversed(chebyshev_T(N).coefficients)))


def derivative(p: DensePolynomial) -> DensePolynomial:
    if p.degree == 0:
        return DensePolynomial.of([0])
    return DensePolynomial.of(
        [i * c for i, c in enumerate(p.coefficients)][1:]
    )


def eval_float(p: DensePolynomial, x: float) -> float:
    """Horner evaluation in double precision.

    Raises OverflowError when a coefficient or the running value leaves the
    double range; use :func:`binet_T` for large-N first-kind evaluation.
    """
    acc = 0.0
    try:
        for c in reversed(p.coefficients):
            acc = acc * x + float(c)
    except OverflowError as exc:
        raise OverflowError(
            f"coefficient too large for float evaluation at x={x!r}"
        ) from exc
    if not math.isfinite(acc):
        raise OverflowError(f"polynomial value overflows at x={x!r}")
    return acc


def binet_T(N: int, x: float) -> float:
    """T_N(x) through the closed form
    ((x - sqrt(x^2-1))^N + (x + sqrt(x^2-1))^N) / 2 for |x| >= 1, falling
    back to cos(N arccos x) inside (-1, 1).

    Both branches avoid the catastrophic cancellation of coefficient-based
    evaluation near |x| = 1.
    """
    if N < 1:
        raise ValueError(f"binet_T requires N >= 1, got N={N}")
    ax = abs(x)
    if ax < 1.0:
        value = math.cos(N * math.acos(x))
        return value
    s = math.sqrt(ax * ax - 1.0)
    big = ax + s
    small = 1.0 / big  # equals ax - s without cancellation
    value = (big**N + small**N) / 2.0
    if x < 0.0 and N % 2 == 1:
        value = -value
    return value
