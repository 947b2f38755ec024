"""Integer recurrence engine against the DP and series engines."""

from __future__ import annotations

from knightpaths import recurrences, series
from knightpaths.counting import ALL, NONNEG, altitude_distribution, count_row
from knightpaths.paths import PathConstraints

ZZ = PathConstraints(zigzag=True)


def test_small_root_matches_series_engine():
    small, _ = series.zigzag_kernel_roots(40)
    fast = recurrences.small_root_coeffs(40)
    assert fast == [int(small.coefficient(i)) for i in range(40)]


def test_total_row():
    assert recurrences.zigzag_total_row(17) == series.zigzag_rational(17)


def test_nonneg_row_vs_engines():
    fast = recurrences.zigzag_nonneg_row(30)
    assert fast[:30] == count_row(29, NONNEG, ZZ)
    assert fast[:30] == series.int_coefficients(series.zigzag_nonneg_gf(31), 30)


def test_altitude_sum_row_vs_dp():
    fast = recurrences.zigzag_altitude_sum_row(26)
    for n in range(26):
        dist = altitude_distribution(n, ZZ)
        assert fast[n] == sum(k * c for k, c in dist.items() if k > 0), n
    assert fast[:26] == series.int_coefficients(series.zigzag_altitude_sum_gf(27), 26)


def test_above_axis_row_vs_dp():
    fast = recurrences.above_axis_row(24)
    assert fast == count_row(23, ALL, PathConstraints(zigzag=True, min_y=0))


def test_above_axis_altitude_sum_vs_dp():
    fast = recurrences.above_axis_altitude_sum_row(22)
    for n in range(22):
        dist = altitude_distribution(n, PathConstraints(zigzag=True, min_y=0))
        assert fast[n] == sum(k * c for k, c in dist.items()), n


def test_above_line_rows_vs_engines():
    for m in (0, 1, 2, 3):
        fast = recurrences.above_line_row(m, 24)
        dp = count_row(23, ALL, PathConstraints(zigzag=True, min_y=-m))
        assert fast == dp, m
    for m in (1, 2):
        gf = series.int_coefficients(series.above_line_gf(m, 25)[0], 24)
        assert recurrences.above_line_row(m, 24) == gf, m


def test_rows_extend_cheaply():
    row = recurrences.zigzag_nonneg_row(400)
    assert row[16] == 1973
    assert row[399] > 10 ** 80  # growth near the golden ratio reciprocal
