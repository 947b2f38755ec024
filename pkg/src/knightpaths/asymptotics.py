"""Asymptotic formulas and empirical convergence diagnostics.

Each formula evaluates in IEEE doubles (evaluate) and, for the convergence
reports, in extended precision via mpmath so that ratios against exact
big-integer counts never overflow.  Exact values come from the integer
recurrence engines and the grand-path dynamic program, never from
truncating the algebraic series at order n.

Every constant here is pinned by the convergence tests: the exact/estimate
ratios must approach 1 over the tested ranges.  The expected-steps formula
for odd sizes is conjectural; it is reported but never gated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import mpmath

from . import closedforms, recurrences
from .counting import grand_row_stats
from .laurent import RationalGF

_GRAND_TOTAL = RationalGF([1], [1, -2, -2])


@dataclass(frozen=True)
class AsymptoticEstimate:
    formula: str
    n: int
    value: float
    constant: float


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    exact: Fraction
    estimate: float
    ratio: float


@dataclass(frozen=True)
class ConvergenceReport:
    formula: str
    m: int | None
    rows: tuple[ConvergenceRow, ...]
    conjecture: bool

    def tail_is_decreasing(self) -> bool:
        """True if |ratio - 1| strictly decreases along the reported sizes."""
        gaps = [abs(r.ratio - 1.0) for r in self.rows if not math.isnan(r.ratio)]
        return all(a > b for a, b in zip(gaps, gaps[1:]))

    def as_dicts(self) -> list[dict]:
        return [
            {
                "n": r.n,
                "exact": str(r.exact) if r.exact.denominator != 1 else str(r.exact.numerator),
                "estimate": r.estimate,
                "ratio": r.ratio,
            }
            for r in self.rows
        ]


# -- formula definitions -----------------------------------------------------
#
# Each entry maps to (constant, growth) callables over a math namespace M
# (math or mpmath), so every constant has a double and an extended-precision
# evaluation path.  value(n) = constant * growth(n).


def _c_grand_all(M):
    return M.sqrt(3) / 6


def _c_grand_nonneg(M):
    return M.sqrt(3) / 12


def _c_grand_altitude_sum(M):
    # the /12 is load-bearing: doubling it makes every exact ratio ~0.5
    return (4 * M.sqrt(3) + 7) * M.sqrt(2) * M.sqrt(137 * M.sqrt(3) - 237) / 12


def _c_grand_expected_altitude(M):
    # altitude-sum prefactor over count prefactor; inherits the 1/2 above
    return (5 + 3 * M.sqrt(3)) * M.sqrt(137 * M.sqrt(3) - 237) * M.sqrt(
        2 / (3 * M.pi)
    ) / 2


def _c_zigzag_expected_altitude(M):
    return 2 * (M.sqrt(5) - 2) / M.sqrt(7 * M.sqrt(5) - 15) / M.sqrt(M.pi)


def _c_zigzag_above_axis_altitude(M):
    return (5 + M.sqrt(5)) * M.sqrt(7 * M.sqrt(5) - 15) / 20 * M.sqrt(M.pi)


def _c_expected_steps(M):
    return (1 + M.sqrt(5)) / (2 * M.sqrt(5))


def _c_above_line(M, m: int):
    base = M.sqrt((7 * M.sqrt(5) - 15) / M.pi)
    if m == 0:
        return (2 + M.sqrt(5)) / 2 * base
    return (4 * m + 3 - M.sqrt(5)) / (4 * (M.sqrt(5) - 2)) * base


def _c_min_height(M, m: int):
    base = M.sqrt((7 * M.sqrt(5) - 15) / M.pi)
    if m == 0:
        return (2 + M.sqrt(5)) / 2 * base
    if m == 1:
        return (5 + 3 * M.sqrt(5)) / 4 * base
    return (2 + M.sqrt(5)) * base  # identical for every m >= 2


def _pow_growth(offset: int) -> Callable:
    def growth(M, n):
        return (1 + M.sqrt(3)) ** (n + offset)

    return growth


@dataclass(frozen=True)
class _Formula:
    constant: Callable  # (M[, m]) -> number
    growth: Callable  # (M, n) -> number
    takes_m: bool = False
    conjecture: bool = False
    exact: Callable | None = None  # (n_list[, m]) -> list[Fraction]


def _exact_grand_all(n_list):
    row = _GRAND_TOTAL.expand(max(n_list) + 1)
    return [Fraction(row[n]) for n in n_list]


def _exact_grand_nonneg(n_list):
    stats = grand_row_stats(max(n_list))
    return [Fraction(stats["nonneg"][n]) for n in n_list]


def _exact_grand_altitude_sum(n_list):
    stats = grand_row_stats(max(n_list))
    return [Fraction(stats["altitude_sum"][n]) for n in n_list]


def _exact_grand_expected_altitude(n_list):
    stats = grand_row_stats(max(n_list))
    return [
        Fraction(stats["altitude_sum"][n], stats["nonneg"][n]) for n in n_list
    ]


def _exact_grand_expected_altitude_positive(n_list):
    stats = grand_row_stats(max(n_list))
    return [
        Fraction(stats["altitude_sum"][n], stats["positive"][n]) for n in n_list
    ]


def _exact_zigzag_expected_altitude(n_list):
    top = max(n_list) + 1
    sums = recurrences.zigzag_altitude_sum_row(top)
    counts = recurrences.zigzag_nonneg_row(top)
    return [Fraction(sums[n], counts[n]) for n in n_list]


def _exact_zigzag_above_axis_altitude(n_list):
    top = max(n_list) + 1
    sums = recurrences.above_axis_altitude_sum_row(top)
    counts = recurrences.above_axis_row(top)
    return [Fraction(sums[n], counts[n]) for n in n_list]


def _exact_expected_steps(n_list):
    return [closedforms.expected_steps(n, 0) for n in n_list]


def _exact_above_line_prob(n_list, m):
    top = max(n_list) + 1
    bounded = recurrences.above_line_row(m, top)
    total = recurrences.zigzag_total_row(top)
    return [Fraction(bounded[n], total[n]) for n in n_list]


def _exact_min_height_prob(n_list, m):
    top = max(n_list) + 1
    at_m = recurrences.above_line_row(m, top)
    total = recurrences.zigzag_total_row(top)
    if m == 0:
        return [Fraction(at_m[n], total[n]) for n in n_list]
    shallower = recurrences.above_line_row(m - 1, top)
    return [Fraction(at_m[n] - shallower[n], total[n]) for n in n_list]


FORMULAS: dict[str, _Formula] = {
    "grand-all": _Formula(
        _c_grand_all, _pow_growth(1), exact=_exact_grand_all
    ),
    "grand-nonneg": _Formula(
        _c_grand_nonneg, _pow_growth(1), exact=_exact_grand_nonneg
    ),
    "grand-altitude-sum": _Formula(
        _c_grand_altitude_sum,
        lambda M, n: M.sqrt(n / M.pi) * (1 + M.sqrt(3)) ** n,
        exact=_exact_grand_altitude_sum,
    ),
    "grand-expected-altitude": _Formula(
        _c_grand_expected_altitude,
        lambda M, n: M.sqrt(n),
        exact=_exact_grand_expected_altitude,
    ),
    "grand-expected-altitude-positive": _Formula(
        _c_grand_expected_altitude,
        lambda M, n: M.sqrt(n),
        exact=_exact_grand_expected_altitude_positive,
    ),
    "zigzag-expected-altitude": _Formula(
        _c_zigzag_expected_altitude,
        lambda M, n: M.sqrt(n),
        exact=_exact_zigzag_expected_altitude,
    ),
    "zigzag-above-axis-altitude": _Formula(
        _c_zigzag_above_axis_altitude,
        lambda M, n: M.sqrt(n),
        exact=_exact_zigzag_above_axis_altitude,
    ),
    "expected-steps-even": _Formula(
        _c_expected_steps, lambda M, n: n, exact=_exact_expected_steps
    ),
    "expected-steps-odd": _Formula(
        _c_expected_steps,
        lambda M, n: n,
        conjecture=True,
        exact=_exact_expected_steps,
    ),
    "above-line-prob": _Formula(
        _c_above_line,
        lambda M, n: 1 / M.sqrt(n),
        takes_m=True,
        exact=_exact_above_line_prob,
    ),
    "min-height-prob": _Formula(
        _c_min_height,
        lambda M, n: 1 / M.sqrt(n),
        takes_m=True,
        exact=_exact_min_height_prob,
    ),
}


def _lookup(formula: str) -> _Formula:
    try:
        return FORMULAS[formula]
    except KeyError:
        raise ValueError(f"unknown formula {formula!r}") from None


def constant(formula: str, m: int | None = None) -> float:
    """The n-free prefactor of the formula, in double precision."""
    entry = _lookup(formula)
    if entry.takes_m:
        if m is None or m < 0:
            raise ValueError(f"{formula} needs a band depth m >= 0")
        return float(entry.constant(math, m))
    return float(entry.constant(math))


def constant_extended(formula: str, m: int | None = None, dps: int = 40) -> mpmath.mpf:
    """The same prefactor evaluated with mpmath at `dps` decimal digits."""
    entry = _lookup(formula)
    with mpmath.workdps(dps):
        if entry.takes_m:
            if m is None or m < 0:
                raise ValueError(f"{formula} needs a band depth m >= 0")
            return entry.constant(mpmath, m)
        return entry.constant(mpmath)


def evaluate(formula: str, n: int, m: int | None = None) -> AsymptoticEstimate:
    """Double-precision value of the formula at n (may overflow to inf)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    entry = _lookup(formula)
    c = constant(formula, m)
    try:
        value = c * float(entry.growth(math, n))
    except OverflowError:
        value = math.inf
    return AsymptoticEstimate(formula, n, value, c)


def _estimate_mp(entry: _Formula, n: int, m: int | None) -> mpmath.mpf:
    c = entry.constant(mpmath, m) if entry.takes_m else entry.constant(mpmath)
    return c * entry.growth(mpmath, n)


def convergence_report(
    formula: str, n_list: list[int], m: int | None = None
) -> ConvergenceReport:
    """Exact values vs the asymptotic estimate over ascending sizes.

    Ratios are exact/estimate computed in extended precision (a count such
    as the grand total at n = 2000 far exceeds double range).  Rows with an
    exact value of zero report a NaN ratio rather than failing.
    """
    if not n_list or sorted(n_list) != list(n_list):
        raise ValueError("n_list must be non-empty and ascending")
    entry = _lookup(formula)
    if entry.exact is None:
        raise ValueError(f"{formula} has no exact source")
    if entry.takes_m:
        if m is None or m < 0:
            raise ValueError(f"{formula} needs a band depth m >= 0")
        exacts = entry.exact(n_list, m)
    else:
        exacts = entry.exact(n_list)
    rows = []
    with mpmath.workdps(40):
        for n, exact in zip(n_list, exacts):
            est = _estimate_mp(entry, n, m)
            if exact == 0:
                ratio = math.nan
            else:
                ratio = float(mpmath.mpf(exact.numerator) / exact.denominator / est)
            rows.append(ConvergenceRow(n, exact, float(est), ratio))
    return ConvergenceReport(formula, m if entry.takes_m else None, tuple(rows), entry.conjecture)
