"""Euler numbers, Euler polynomials, and their higher-order generalization,
all exact, by two independent routes.

Conventions.  The Euler numbers E_n are the coefficients of z^n/n! in
1/cosh z (zero for odd n).  E_n(x) denotes the Euler polynomial, with
E_n(x) = sum_k binom(n, k) (E_k / 2^k) (x - 1/2)^{n-k}, and E_n^{(p)}(x) the
order-p polynomial whose exponential generating function is
(2 / (1 + e^z))^p e^{xz}; order p = 1 recovers E_n(x).  All of these are
monic of degree n.

Two construction routes are provided for the generalized polynomials and are
required to agree coefficient-for-coefficient:

* ``gen_euler_recursive`` iterates the order-raising convolution of the
  values at zero, E_n^{(p)}(0) = sum_k binom(n, k) E_k^{(p-1)}(0) E_{n-k}(0),
  then expands E_n^{(p)}(x) = sum_k binom(n, k) x^k E_{n-k}^{(p)}(0).
* ``gen_euler_series`` expands the generating function directly: truncated
  reciprocal of (1 + e^z)/2, raised to the p-th power by repeated squaring,
  then multiplied by the e^{xz} series symbolically in x.

Series coefficients are stored in ordinary form c_n = a_n / n!, which keeps
the order-raising convolutions binomial and exact.  The value-at-zero rows
are memoized per order behind a lock; the identity sweeps downstream touch
hundreds of orders and reuse them heavily.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Rational, binomial, format_rational
from .series import TruncatedSeries

__all__ = [
    "EulerTable",
    "PolyInX",
    "euler_numbers",
    "euler_at_zero",
    "euler_poly",
    "gen_euler_zero",
    "gen_euler_recursive",
    "gen_euler_series",
    "eval_poly",
]

_CACHE_LOCK = threading.Lock()
_EULER_NUMBERS: list[int] = [1]
# Value-at-zero rows by order: row p holds E_0^{(p)}(0), E_1^{(p)}(0), ...
_ZERO_ROWS: dict[int, list[Fraction]] = {0: [Fraction(1)], 1: [Fraction(1)]}


@dataclass(frozen=True)
class EulerTable:
    """Euler numbers E_n and values E_n(0) for n = 0..max_n."""

    max_n: int
    euler_numbers: tuple[int, ...]
    euler_at_zero: tuple[Fraction, ...]

    def json_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "euler_numbers": [str(e) for e in self.euler_numbers],
            "euler_at_zero": [format_rational(v) for v in self.euler_at_zero],
        }

    def csv_rows(self) -> list[list[str]]:
        rows = [["n", "euler_number", "euler_at_zero", "euler_at_zero_float"]]
        for n in range(self.max_n + 1):
            rows.append(
                [
                    str(n),
                    str(self.euler_numbers[n]),
                    format_rational(self.euler_at_zero[n]),
                    repr(float(self.euler_at_zero[n])),
                ]
            )
        return rows


@dataclass(frozen=True)
class PolyInX:
    """Monic degree-n polynomial in x with exact coefficients (index = power)
    and the order p it was built at (p = 1 for the classical case)."""

    coefficients: tuple[Fraction, ...]
    order: int

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "order": self.order,
            "coefficients": [format_rational(c) for c in self.coefficients],
            "coefficients_float": [float(c) for c in self.coefficients],
        }


def _euler_numbers_upto(max_n: int) -> list[int]:
    # Caller holds _CACHE_LOCK.  Recurrence from cosh z * sum E_n z^n/n! = 1:
    # sum over even k <= m of binom(m, k) E_k = 0 for even m >= 2.
    for m in range(len(_EULER_NUMBERS), max_n + 1):
        if m % 2 == 1:
            _EULER_NUMBERS.append(0)
        else:
            acc = sum(binomial(m, k) * _EULER_NUMBERS[k] for k in range(0, m, 2))
            _EULER_NUMBERS.append(-acc)
    return _EULER_NUMBERS[: max_n + 1]


def _zero_row_one_upto(max_n: int) -> list[Fraction]:
    # Caller holds _CACHE_LOCK.  From (e^z + 1) sum E_n(0) z^n/n! = 2:
    # E_n(0) = -(1/2) sum_{k<n} binom(n, k) E_k(0) for n >= 1.
    row = _ZERO_ROWS[1]
    for n in range(len(row), max_n + 1):
        acc = sum(binomial(n, k) * row[k] for k in range(n))
        row.append(-acc / 2)
    return row


def _zero_rows_upto(p: int, max_n: int) -> list[Fraction]:
    # Caller holds _CACHE_LOCK.  Raise the order one convolution at a time,
    # extending every intermediate row to max_n.
    base = _zero_row_one_upto(max_n)
    row0 = _ZERO_ROWS[0]
    row0.extend([Fraction(0)] * (max_n + 1 - len(row0)))
    if p <= 1:
        return _ZERO_ROWS[p]
    for q in range(2, p + 1):
        prev = _ZERO_ROWS[q - 1]
        row = _ZERO_ROWS.setdefault(q, [])
        for n in range(len(row), max_n + 1):
            row.append(
                sum(binomial(n, k) * prev[k] * base[n - k] for k in range(n + 1))
            )
    return _ZERO_ROWS[p]


def euler_numbers(max_n: int) -> EulerTable:
    """Euler numbers and values at zero through max_n, exact."""
    if max_n < 0:
        raise ValueError(f"euler_numbers requires max_n >= 0, got {max_n}")
    with _CACHE_LOCK:
        numbers = tuple(_euler_numbers_upto(max_n))
        at_zero = tuple(_zero_row_one_upto(max_n)[: max_n + 1])
    return EulerTable(max_n, numbers, at_zero)


def euler_at_zero(max_n: int) -> tuple[Fraction, ...]:
    """E_0(0)..E_max_n(0), exact."""
    if max_n < 0:
        raise ValueError(f"euler_at_zero requires max_n >= 0, got {max_n}")
    with _CACHE_LOCK:
        return tuple(_zero_row_one_upto(max_n)[: max_n + 1])


def gen_euler_zero(p: int, max_n: int) -> tuple[Fraction, ...]:
    """E_0^{(p)}(0)..E_max_n^{(p)}(0), exact and memoized per order."""
    if p < 0:
        raise ValueError(f"gen_euler_zero requires p >= 0, got p={p}")
    if max_n < 0:
        raise ValueError(f"gen_euler_zero requires max_n >= 0, got {max_n}")
    with _CACHE_LOCK:
        return tuple(_zero_rows_upto(p, max_n)[: max_n + 1])


def euler_poly(n: int) -> PolyInX:
    """Euler polynomial E_n(x) via the half-shift binomial expansion from the
    Euler numbers."""
    if n < 0:
        raise ValueError(f"euler_poly requires n >= 0, got n={n}")
    numbers = euler_numbers(n).euler_numbers
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        if numbers[k] == 0:
            continue
        weight = Fraction(binomial(n, k) * numbers[k], 2**k)
        m = n - k
        for j in range(m + 1):
            coeffs[j] += weight * binomial(m, j) * Fraction(-1, 2) ** (m - j)
    return PolyInX(tuple(coeffs), order=1)


def gen_euler_recursive(n: int, p: int) -> PolyInX:
    """E_n^{(p)}(x) built from the order-raised values at zero.

    Order p = 0 is admitted as the empty product, E_n^{(0)}(x) = x^n.
    """
    if n < 0:
        raise ValueError(f"gen_euler_recursive requires n >= 0, got n={n}")
    if p < 0:
        raise ValueError(f"gen_euler_recursive requires p >= 0, got p={p}")
    row = gen_euler_zero(p, n)
    coeffs = tuple(binomial(n, k) * row[n - k] for k in range(n + 1))
    return PolyInX(coeffs, order=p)


def gen_euler_series(n: int, p: int) -> PolyInX:
    """E_n^{(p)}(x) from the generating function directly; independent of the
    recursive route and required to match it exactly."""
    if n < 0:
        raise ValueError(f"gen_euler_series requires n >= 0, got n={n}")
    if p < 0:
        raise ValueError(f"gen_euler_series requires p >= 0, got p={p}")
    # (1 + e^z)/2 as an ordinary-coefficient truncation: 1 + sum z^j/(2 j!).
    denom = TruncatedSeries.of(
        [Fraction(1)] + [Fraction(1, 2 * math.factorial(j)) for j in range(1, n + 1)],
        n,
    )
    powered = denom.reciprocal().pow(p)
    coeffs = tuple(
        binomial(n, k) * powered[n - k] * math.factorial(n - k)
        for k in range(n + 1)
    )
    return PolyInX(coeffs, order=p)


def eval_poly(poly: PolyInX, x: Rational) -> Fraction:
    """Exact Horner evaluation."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(poly.coefficients):
        acc = acc * x + c
    return acc
