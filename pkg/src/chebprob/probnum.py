"""Probability numbers: the law of the random index mu_N.

The generating function of mu_N is the reciprocal 1/T_N(1/z); its power
series coefficients p_ell = Pr(mu_N = ell) are nonnegative rationals
supported on {N, N+2, N+4, ...}.  This module computes them by three
independent routes and cross-validates:

* ``probnum_series``  -- exact: z^N times the truncated reciprocal of the
  reversed Chebyshev polynomial (long division over rationals).
* ``probnum_trig``    -- float: the root-angle formula
  p_ell = (1/N) sum_{k=1}^{N} (-1)^{k+1} sin(t_k) cos(t_k)^{ell-1}
  with t_k = (2k-1) pi / (2N).
* ``probnum_catalan`` -- exact: an alternating ballot-number (Catalan
  triangle) sum, one closed branch for ell an odd multiple of N and one for
  the rest.

Exact routes must agree identically; the trig route agrees to float
accuracy.  ``cross_validate`` enforces both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Literal, Sequence

from .chebyshev import reversed_T
from .exactnum import ballot_number, format_rational
from .series import TruncatedSeries

__all__ = [
    "Method",
    "ProbTable",
    "RootAngle",
    "CrossValidationError",
    "CrossValidationReport",
    "root_angles",
    "probnum_series",
    "probnum_trig",
    "probnum_catalan",
    "catalan_table",
    "trig_value",
    "alternating_phase_sum",
    "cross_validate",
    "tail_mass",
    "geometric_tail_bound",
]

Method = Literal["series", "trig", "catalan"]


class CrossValidationError(Exception):
    """Two computation methods disagree at a specific index."""

    def __init__(self, N: int, ell: int, methods: str, detail: str):
        self.N = N
        self.ell = ell
        self.methods = methods
        super().__init__(f"N={N}, ell={ell}, {methods}: {detail}")


@dataclass(frozen=True)
class RootAngle:
    """k-th root angle t_k = (2k-1) pi / (2N); cos(t_k) is a root of T_N."""

    k: int
    theta: float


def root_angles(N: int) -> tuple[RootAngle, ...]:
    if N < 1:
        raise ValueError(f"root_angles requires N >= 1, got N={N}")
    return tuple(
        RootAngle(k, (2 * k - 1) * math.pi / (2 * N)) for k in range(1, N + 1)
    )


@dataclass(frozen=True)
class ProbTable:
    """Prefix of the law of mu_N: values[ell] approximates or equals p_ell
    for ell = 0..max_ell, tagged with the producing method and an upper
    bound on the mass beyond max_ell."""

    N: int
    max_ell: int
    values: tuple
    method: Method
    tail_bound: float

    def value(self, ell: int):
        if not 0 <= ell <= self.max_ell:
            raise IndexError(f"ell={ell} outside table range 0..{self.max_ell}")
        return self.values[ell]

    def support(self) -> Iterator[tuple[int, object]]:
        """(ell, value) pairs over the support indices N, N+2, ..."""
        for ell in range(self.N, self.max_ell + 1, 2):
            yield ell, self.values[ell]

    def validate(self, float_tol: float = 0.0) -> None:
        """Check the structural invariants: vanishing below N and off-parity,
        nonnegativity, and partial sum <= 1.  Exact tables are checked
        exactly; pass ``float_tol`` for float-valued tables."""
        for ell, v in enumerate(self.values):
            off_support = ell < self.N or (ell - self.N) % 2 != 0
            if off_support and abs(v) > float_tol:
                raise AssertionError(
                    f"N={self.N}: nonzero value {v} at off-support ell={ell}"
                )
            if not off_support and v < -float_tol:
                raise AssertionError(
                    f"N={self.N}: negative value {v} at ell={ell}"
                )
        total = sum(self.values)
        if total > 1 + float_tol * max(1, len(self.values)):
            raise AssertionError(f"N={self.N}: partial sum {total} exceeds 1")

    def rows(self) -> list[tuple[int, str | None, float]]:
        """Support rows (ell, exact-string-or-None, float value)."""
        exact = self.method != "trig"
        out = []
        for ell, v in self.support():
            if exact:
                out.append((ell, format_rational(v), float(v)))
            else:
                out.append((ell, None, float(v)))
        return out

    def json_dict(self) -> dict:
        return {
            "N": self.N,
            "max_ell": self.max_ell,
            "method": self.method,
            "tail_bound": self.tail_bound,
            "values": [
                {"ell": ell, "exact": exact, "float": fv}
                for ell, exact, fv in self.rows()
            ],
        }

    def csv_rows(self) -> list[list[str]]:
        rows = [["ell", "exact", "float"]]
        for ell, exact, fv in self.rows():
            rows.append([str(ell), exact if exact is not None else "", repr(fv)])
        return rows


def _series_values(N: int, max_ell: int) -> list[Fraction]:
    q = reversed_T(N)
    order = max_ell - N
    recip = TruncatedSeries.of(q.coefficients, order).reciprocal()
    values = [Fraction(0)] * N + list(recip.coefficients)
    return values[: max_ell + 1]


def probnum_series(N: int, max_ell: int) -> ProbTable:
    """Exact table of p_0..p_max_ell via the reciprocal series of the
    reversed polynomial (method tag "series")."""
    _check_table_args(N, max_ell)
    values = _series_values(N, max_ell)
    tail = _tail_from_partial(values)
    return ProbTable(N, max_ell, tuple(values), "series", tail)


def trig_value(N: int, ell: int) -> float:
    """Root-angle formula for p_ell in double precision (compensated sum
    over the alternating root terms).  Total in ell; returns 0.0 at ell=0."""
    if N < 1:
        raise ValueError(f"trig_value requires N >= 1, got N={N}")
    if ell < 0:
        raise ValueError(f"trig_value requires ell >= 0, got ell={ell}")
    if ell == 0:
        return 0.0
    terms = []
    for angle in root_angles(N):
        sign = 1.0 if angle.k % 2 == 1 else -1.0
        terms.append(sign * math.sin(angle.theta) * math.cos(angle.theta) ** (ell - 1))
    return math.fsum(terms) / N


def probnum_trig(N: int, max_ell: int) -> ProbTable:
    """Float table of p_0..p_max_ell from the root-angle formula (method tag
    "trig").  Off-support entries carry the formula's cancellation residue,
    of the order of machine epsilon.  The tail bound is the geometric bound
    from the dominant root cos(pi/(2N))."""
    _check_table_args(N, max_ell)
    values = tuple(trig_value(N, ell) for ell in range(max_ell + 1))
    return ProbTable(N, max_ell, values, "trig", geometric_tail_bound(N, max_ell))


def probnum_catalan(N: int, ell: int) -> Fraction:
    """p_ell as an alternating ballot-number sum, exactly.

    For ell an odd multiple of N (write ell = (2k+1) N):

        p_ell = 2^-ell * sum_{s=1}^{ell/N - 1} (-1)^{k-s} A(ell-1, s N)
                + (-1)^k * 2^{1-ell}

    otherwise (ell == N mod 2 required):

        p_ell = 2^-ell * sum_t (-1)^t A(ell-1, (ell - (2t+1) N) / 2)

    with t running over floor((2-ell)/N - 1)/2 .. floor((ell/N - 1)/2) and
    A(n, k) the ballot number.  The total binomial convention makes the
    out-of-triangle indices harmless.
    """
    if N < 1:
        raise ValueError(f"probnum_catalan requires N >= 1, got N={N}")
    if ell < 1:
        raise ValueError(f"probnum_catalan requires ell >= 1, got ell={ell}")
    if (ell - N) % 2 != 0:
        raise ValueError(
            f"parity mismatch: ell={ell} must equal N={N} mod 2 "
            "(off-parity values are identically zero upstream)"
        )
    if ell % N == 0 and (ell // N) % 2 == 1:
        k = (ell // N - 1) // 2
        acc = 0
        for s in range(1, ell // N):
            sign = -1 if (k - s) % 2 else 1
            acc += sign * ballot_number(ell - 1, s * N)
        boundary_sign = -1 if k % 2 else 1
        return Fraction(acc, 2**ell) + Fraction(boundary_sign * 2, 2**ell)
    # Integer floor division rounds toward -inf, matching the floor bounds.
    t_lo = (2 - ell - N) // (2 * N)
    t_hi = (ell - N) // (2 * N)
    acc = 0
    for t in range(t_lo, t_hi + 1):
        sign = -1 if t % 2 else 1
        acc += sign * ballot_number(ell - 1, (ell - (2 * t + 1) * N) // 2)
    return Fraction(acc, 2**ell)


def catalan_table(N: int, max_ell: int) -> ProbTable:
    """Exact table assembled index-by-index from :func:`probnum_catalan`
    (method tag "catalan"); off-support entries are zero by the vanishing
    rules."""
    _check_table_args(N, max_ell)
    values = [Fraction(0)] * (max_ell + 1)
    for ell in range(N, max_ell + 1, 2):
        values[ell] = probnum_catalan(N, ell)
    tail = _tail_from_partial(values)
    return ProbTable(N, max_ell, tuple(values), "catalan", tail)


def alternating_phase_sum(N: int, z: float) -> complex:
    """sum_{k=1}^{N} (-1)^{k+1} exp(i t_k z) over the root angles t_k.

    Closed form of the geometric progression:
    (1 - (-1)^N e^{i pi z}) / (2 cos(pi z / 2N)) away from the singular
    points z = (2t+1) N, where the limit value (-1)^t N i applies.
    """
    if N < 1:
        raise ValueError(f"alternating_phase_sum requires N >= 1, got N={N}")
    ratio = z / N
    t = round((ratio - 1.0) / 2.0)
    if abs(z - (2 * t + 1) * N) < 1e-12:
        sign = -1.0 if t % 2 else 1.0
        return complex(0.0, sign * N)
    numerator = 1.0 - (-1.0 if N % 2 else 1.0) * complex(
        math.cos(math.pi * z), math.sin(math.pi * z)
    )
    return numerator / (2.0 * math.cos(math.pi * z / (2 * N)))


@dataclass(frozen=True)
class CrossValidationReport:
    N: int
    max_ell: int
    tol: float
    max_trig_deviation: float
    indices_checked: int

    def json_dict(self) -> dict:
        return {
            "N": self.N,
            "max_ell": self.max_ell,
            "tol": self.tol,
            "max_trig_deviation": self.max_trig_deviation,
            "indices_checked": self.indices_checked,
        }


def cross_validate(N: int, max_ell: int, tol: float) -> CrossValidationReport:
    """Require series == catalan exactly and |series - trig| <= tol at every
    index through max_ell; returns the worst trig deviation seen.

    Raises :class:`CrossValidationError` naming (N, ell, method pair) on the
    first disagreement.
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    series = probnum_series(N, max_ell)
    worst = 0.0
    for ell in range(max_ell + 1):
        exact = series.values[ell]
        on_support = ell >= N and (ell - N) % 2 == 0
        if on_support:
            by_catalan = probnum_catalan(N, ell)
            if by_catalan != exact:
                raise CrossValidationError(
                    N, ell, "series/catalan",
                    f"{format_rational(exact)} != {format_rational(by_catalan)}",
                )
        elif exact != 0:
            raise CrossValidationError(
                N, ell, "series", f"expected 0 off support, got {exact}"
            )
        deviation = abs(float(exact) - trig_value(N, ell))
        worst = max(worst, deviation)
        if deviation > tol:
            raise CrossValidationError(
                N, ell, "series/trig", f"deviation {deviation:.3e} > tol {tol:.3e}"
            )
    return CrossValidationReport(N, max_ell, tol, worst, max_ell + 1)


def tail_mass(N: int, max_ell: int) -> float:
    """Upper bound on the mass beyond max_ell: one minus the exact partial
    sum, rounded up to the next float."""
    _check_table_args(N, max_ell)
    return _tail_from_partial(_series_values(N, max_ell))


def geometric_tail_bound(N: int, max_ell: int) -> float:
    """Closed-form tail bound c^max_ell / (1 - c) with c = cos(pi/(2N)):
    every p_ell is at most c^(ell-1), so the geometric sum dominates the
    tail.  Coarser than :func:`tail_mass` but needs no exact table."""
    if N < 1:
        raise ValueError(f"geometric_tail_bound requires N >= 1, got N={N}")
    c = math.cos(math.pi / (2 * N))
    if c <= 0.0:
        return 0.0
    return c**max_ell / (1.0 - c)


def _check_table_args(N: int, max_ell: int) -> None:
    if N < 1:
        raise ValueError(f"N must be >= 1, got N={N}")
    if max_ell < N:
        raise ValueError(f"max_ell must be >= N, got max_ell={max_ell} < N={N}")


def _tail_from_partial(values: Sequence[Fraction]) -> float:
    gap = 1 - sum(values)
    approx = float(gap)
    if Fraction(approx) < gap:
        approx = math.nextafter(approx, math.inf)
    return approx
