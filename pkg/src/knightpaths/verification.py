"""Cross-engine verification suite.

Nine numbered checks, each pitting at least two independent engines against
each other or against the embedded fixtures.  The CLI `verify` command and
the acceptance test module both run these; a check failure is always a real
disagreement, never a formatting artifact.

Levels: "quick" runs reduced ranges (a few seconds); "full" runs the
complete ranges, including the large-size asymptotic gates (minutes).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator

from . import asymptotics, bijections, closedforms, counting, series
from .counting import ALL, NONNEG
from .fixtures import GRAND_TABLE, SEQUENCES, SPAN_TABLE, ZIGZAG_TABLE
from .paths import DOWN, UP, Path, PathConstraints, Step, validate_path


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float
    gated: bool = True


def _zigzag(**kw) -> PathConstraints:
    return PathConstraints(zigzag=True, **kw)


# -- criterion 1: table fixtures ---------------------------------------------


def check_table_fixtures(level: str = "quick") -> tuple[bool, str]:
    problems = []
    alt_gfs = {
        k: series.z_coefficients(series.grand_altitude_gf(k, 12), 10)
        for k in range(10)
    }
    for n in range(10):
        dist = counting.altitude_distribution(n, PathConstraints())
        for k in range(10):
            want = GRAND_TABLE[n][k]
            if dist.get(k, 0) != want:
                problems.append(f"grand DP ({n},{k})={dist.get(k, 0)} != {want}")
            if alt_gfs[k][n] != want:
                problems.append(f"grand GF ({n},{k})={alt_gfs[k][n]} != {want}")
    zig_gfs = {
        k: series.int_coefficients(series.zigzag_altitude_gf(k, 18), 16)
        for k in range(5)
    }
    for n in range(16):
        dist = counting.altitude_distribution(n, _zigzag())
        for k in range(5):
            want = ZIGZAG_TABLE[k][n]
            if dist.get(k, 0) != want:
                problems.append(f"zigzag DP ({n},{k})={dist.get(k, 0)} != {want}")
            if zig_gfs[k][n] != want:
                problems.append(f"zigzag GF ({n},{k})={zig_gfs[k][n]} != {want}")
            got = closedforms.zigzag_count_closed(n, k)
            if got != want:
                problems.append(f"zigzag closed ({n},{k})={got} != {want}")
    for k in (1, 2, 3):
        row = series.int_coefficients(series.span_exact_gf(k, 18), 17)
        if tuple(row) != SPAN_TABLE[k - 1]:
            problems.append(f"span GF k={k}: {row}")
        dp_row = [_span_count_dp(n, k) for n in range(17)]
        if tuple(dp_row) != SPAN_TABLE[k - 1]:
            problems.append(f"span DP k={k}: {dp_row}")
    return not problems, "; ".join(problems) or "3 tables, 2 engines each"


def _span_count_dp(n: int, k: int) -> int:
    """Exact-span count via banded DP totals and inclusion-exclusion."""
    total = 0
    for m in range(0, k + 1):
        lo, hi = m, k - m
        inside = _band_count(n, lo, hi)
        sub_lo = _band_count(n, lo - 1, hi) if lo > 0 else 0
        sub_hi = _band_count(n, lo, hi - 1) if hi > 0 else 0
        sub_both = _band_count(n, lo - 1, hi - 1) if lo > 0 and hi > 0 else 0
        total += inside - sub_lo - sub_hi + sub_both
    return total


def _band_count(n: int, m: int, M: int) -> int:
    if m < 0 or M < 0:
        return 0
    if m == 0 and M == 0:
        return 1 if n == 0 else 0
    return counting.count_paths(n, ALL, _zigzag(min_y=-m, max_y=M))


# -- criterion 2: sequence fixtures ------------------------------------------


def check_sequence_fixtures(level: str = "quick") -> tuple[bool, str]:
    problems = []

    def compare(name: str, got: list[int]) -> None:
        want = list(SEQUENCES[name].terms)
        if got[: len(want)] != want:
            problems.append(f"{name}: {got[: len(want)]} != {want}")

    n_grand = len(SEQUENCES["grand-nonneg"].terms)
    compare("grand-total", series.GRAND_TOTAL_GF.expand(11))
    stats = counting.grand_row_stats(n_grand - 1)
    compare("grand-total", stats["total"][:11])
    h1, dh1 = series.grand_totals(n_grand)
    compare("grand-nonneg", [int(c) for c in series.z_coefficients(h1, n_grand)])
    compare("grand-nonneg", stats["nonneg"])
    compare("grand-altitude-sum", [int(c) for c in series.z_coefficients(dh1, n_grand)])
    compare("grand-altitude-sum", stats["altitude_sum"])

    compare("zigzag-total", series.zigzag_rational(17))
    compare("zigzag-total", counting.count_row(16, ALL, _zigzag()))
    compare("zigzag-nonneg", series.int_coefficients(series.zigzag_nonneg_gf(18), 17))
    compare("zigzag-nonneg", counting.count_row(16, NONNEG, _zigzag()))
    compare(
        "zigzag-primitive",
        series.int_coefficients(series.zigzag_primitive_gf(24), 23),
    )
    compare("zigzag-primitive", [counting.count_primitive(n) for n in range(23)])
    above2, _ = series.above_line_gf(2, 17)
    compare("above-line-m2", series.int_coefficients(above2, 16))
    compare("above-line-m2", counting.count_row(15, ALL, _zigzag(min_y=-2)))
    compare("tube1-axis", series.TUBE1_AXIS_GF.expand(19))
    compare(
        "tube1-axis",
        series.int_coefficients(series.tube_gf(1, 1, 20).axis(), 19),
    )
    compare("tube1-axis", counting.count_row(18, 0, _zigzag(min_y=-1, max_y=1)))
    compare(
        "band-0-2-axis",
        series.int_coefficients(series.tube_axis_gf(2, 20), 19),
    )
    compare("band-0-2-axis", counting.count_row(18, 0, _zigzag(min_y=0, max_y=2)))
    return not problems, "; ".join(problems) or f"{len(SEQUENCES)} sequences"


# -- criterion 3: cross-engine equivalence -----------------------------------


def check_cross_engine(level: str = "quick") -> tuple[bool, str]:
    n_top, k_top, band_top = (20, 8, 25) if level == "full" else (12, 4, 12)
    problems = []
    gfs = {
        k: series.int_coefficients(series.zigzag_altitude_gf(k, n_top + 2), n_top + 1)
        for k in range(k_top + 1)
    }
    for n in range(n_top + 1):
        dist = counting.altitude_distribution(n, _zigzag())
        for k in range(-k_top, k_top + 1):
            dp = dist.get(k, 0)
            closed = closedforms.zigzag_count_closed(n, k)
            gf = gfs[abs(k)][n]
            if not dp == closed == gf:
                problems.append(f"({n},{k}): dp={dp} closed={closed} gf={gf}")
    configs = [("above", m, None) for m in (1, 2, 3)]
    configs += [
        ("tube", m, M) for m in range(0, 4) for M in range(max(m, 1), 4)
    ]
    for kind, m, M in configs:
        if kind == "above":
            gf_row = series.int_coefficients(
                series.above_line_gf(m, band_top + 1)[0], band_top + 1
            )
            dp_row = counting.count_row(band_top, ALL, _zigzag(min_y=-m))
        else:
            gf_row = series.int_coefficients(
                series.tube_total_gf(m, M, band_top + 1), band_top + 1
            )
            dp_row = counting.count_row(band_top, ALL, _zigzag(min_y=-m, max_y=M))
        if gf_row != dp_row:
            problems.append(f"{kind} m={m} M={M}: gf={gf_row} dp={dp_row}")
    scope = f"n<={n_top}, |k|<={k_top}, bands n<={band_top}"
    return not problems, "; ".join(problems[:4]) or scope


# -- criterion 4: bijection round trips ---------------------------------------


def check_bijections(level: str = "quick") -> tuple[bool, str]:
    weight_top = 14 if level == "full" else 9
    band_size_top = 16 if level == "full" else 12
    problems = []
    pairs = 0
    for n in range(weight_top + 1):
        for m in range(weight_top + 1 - n):
            for pair in bijections.composition_pairs(n, m):
                pairs += 1
                path = bijections.pair_to_path(pair)
                if path.size != n + m or path.altitude != m - n:
                    problems.append(f"size/altitude bookkeeping {pair}")
                if path.steps and path.steps[0].direction != UP:
                    problems.append(f"rising image starts down: {pair}")
                if not path.is_zigzag():
                    problems.append(f"image not zigzag: {pair}")
                if bijections.path_to_pair(path) != pair:
                    problems.append(f"rising round trip failed: {pair}")
                mirror = bijections.pair_to_path_falling(pair)
                if mirror.steps and mirror.steps[0].direction != DOWN:
                    problems.append(f"falling image starts up: {pair}")
                if bijections.path_to_pair_falling(mirror) != pair:
                    problems.append(f"falling round trip failed: {pair}")
    # image counts match the one-sided closed form
    for n in range(0, weight_top + 1):
        for k in range(-n, n + 1):
            if (n - k) % 2:
                continue
            images = {
                bijections.pair_to_path(p).steps
                for p in bijections.composition_pairs((n - k) // 2, (n + k) // 2)
            }
            want = closedforms.zigzag_count_one_sided(n, k)
            if len(images) != want:
                problems.append(f"image count ({n},{k}): {len(images)} != {want}")
    # narrow band: round trip over every qualifying path
    band = _zigzag(min_y=-1, max_y=1)
    for size in range(4, band_size_top + 1, 2):
        for path in counting.generate(size, band):
            if path.altitude != 0 or path.steps[0] is not Step.E:
                continue
            comp = bijections.narrow_band_composition(path)
            if bijections.narrow_band_path(comp) != path:
                problems.append(f"band round trip failed at size {size}")
            if 2 * comp.total + 4 != size:
                problems.append(f"band size bookkeeping at size {size}")
    return not problems, "; ".join(problems[:4]) or f"{pairs} pairs round-tripped"


# -- criterion 5: kernel certificates -----------------------------------------


def check_kernel_certificates(level: str = "quick") -> tuple[bool, str]:
    problems = []
    res1, res2 = series.grand_kernel_residuals(50)
    for label, res in (("large root 1", res1), ("large root 2", res2)):
        if not res.is_zero() or res.order < 100:
            problems.append(f"grand kernel at {label}: nonzero to order {res.order}")
    zres1, zres2 = series.zigzag_kernel_residuals(50)
    for label, res in (("small", zres1), ("large", zres2)):
        if not res.is_zero() or res.order < 50:
            problems.append(f"zigzag kernel at {label} root: nonzero")
    root1, root2 = series.grand_kernel_roots(50)
    for s in (root1 + root2, root1 * root2):
        series.z_coefficients(s, 50)  # raises on parity violation
    for gf in (series.grand_boundary_gfs(50)[0], series.grand_totals(50)[0]):
        series.z_coefficients(gf, 50)  # raises on parity violation
    small, large = series.zigzag_kernel_roots(50)
    prod = small * large
    if series.int_coefficients(prod, 40) != [1] + [0] * 39:
        problems.append("small*large != 1")
    if small.valuation != 3 or large.valuation != -3:
        problems.append(
            f"root valuations ({small.valuation}, {large.valuation}) != (3, -3)"
        )
    return not problems, "; ".join(problems) or "kernel residuals zero to order 50"


# -- criterion 6: threshold law ------------------------------------------------


def check_threshold_law(level: str = "quick") -> tuple[bool, str]:
    problems = []
    for m in range(1, 6):
        cutoff = 3 * m - 2
        free = counting.count_row(cutoff, ALL, _zigzag())
        bounded = counting.count_row(cutoff, ALL, _zigzag(min_y=-m))
        if free[:cutoff] != bounded[:cutoff]:
            problems.append(f"m={m}: rows differ before size {cutoff}")
        if free[cutoff] == bounded[cutoff]:
            problems.append(f"m={m}: rows agree at size {cutoff}")
        gf_row = series.int_coefficients(
            series.above_line_gf(m, cutoff + 2)[0], cutoff + 1
        )
        rational = series.zigzag_rational(cutoff + 1)
        diff_val = next(
            (i for i in range(cutoff + 1) if gf_row[i] != rational[i]), None
        )
        if diff_val != cutoff:
            problems.append(f"m={m}: GF difference valuation {diff_val} != {cutoff}")
        witness = Path(tuple([Step.NB, Step.E] * (m - 1) + [Step.NB]))
        if witness.size != cutoff or validate_path(witness, _zigzag(min_y=-m)):
            problems.append(f"m={m}: witness path check failed")
        if not validate_path(witness, _zigzag(min_y=-(m + 1))):
            problems.append(f"m={m}: witness should fit one line lower")
    return not problems, "; ".join(problems) or "thresholds 3m-2 for m=1..5"


# -- criterion 7: asymptotic gates ----------------------------------------------


def check_asymptotics(level: str = "quick") -> tuple[bool, str]:
    if level != "full":
        gates = [
            ("grand-all", None, [100], 0.01, False),
            ("grand-altitude-sum", None, [60], 0.05, False),
            ("expected-steps-even", None, [200], 0.02, False),
        ]
    else:
        gates = [
            ("grand-all", None, [200], 0.01, False),
            ("grand-nonneg", None, [200], 0.01, False),
            ("grand-altitude-sum", None, [500], 0.05, False),
            ("zigzag-expected-altitude", None, [500, 1000, 2000], 0.10, True),
            ("above-line-prob", 0, [500, 1000, 2000], 0.10, True),
            ("above-line-prob", 1, [500, 1000, 2000], 0.10, True),
            ("above-line-prob", 2, [500, 1000, 2000], 0.10, True),
            ("expected-steps-even", None, [2000], 0.02, False),
        ]
    problems = []
    details = []
    for formula, m, n_list, tol, need_decreasing in gates:
        report = asymptotics.convergence_report(formula, n_list, m=m)
        last = report.rows[-1]
        tag = formula if m is None else f"{formula}(m={m})"
        details.append(f"{tag}@{last.n}: {last.ratio:.4f}")
        if abs(last.ratio - 1.0) > tol:
            problems.append(
                f"{tag}: |{last.ratio:.4f} - 1| > {tol} at n={last.n}"
            )
        if need_decreasing and not report.tail_is_decreasing():
            problems.append(f"{tag}: |ratio - 1| not decreasing over {n_list}")
    return not problems, "; ".join(problems) or "; ".join(details)


# -- criterion 8: step-number refinement ----------------------------------------


def check_step_refinement(level: str = "quick") -> tuple[bool, str]:
    sum_top, triple_top = (14, 12) if level == "full" else (9, 8)
    problems = []
    for n in range(sum_top + 1):
        for k in range(-5, 6):
            if (n, k) == (0, 0):
                continue  # the empty path sits in both start classes at once
            total = sum(
                closedforms.zigzag_step_count(n, k, i, d)
                for i in range(n + 1)
                for d in (UP, DOWN)
            )
            want = closedforms.zigzag_count_closed(n, k)
            if total != want:
                problems.append(f"sum ({n},{k}): {total} != {want}")
    for first in (UP, DOWN):
        for n in range(1, triple_top + 1):
            table = counting.step_count_distribution(n, _zigzag(first_dir=first))
            for k in range(-2 * n, 2 * n + 1):
                for i in range(n + 1):
                    formula = closedforms.zigzag_step_count(n, k, i, first)
                    dp = table.get((k, i), 0)
                    if formula != dp:
                        problems.append(
                            f"({n},{k},{i},{'up' if first == UP else 'down'}): "
                            f"formula={formula} dp={dp}"
                        )
    return not problems, "; ".join(problems[:4]) or f"triples to n<={triple_top}"


# -- criterion 9: tiling equinumerosity ------------------------------------------


def check_tiling(level: str = "quick") -> tuple[bool, str]:
    top = 10 if level == "full" else 7
    problems = []
    band = _zigzag(min_y=-1, max_y=1)
    axis_row = series.TUBE1_AXIS_GF.expand(2 * top + 5)
    for n in range(top + 1):
        tiles = bijections.tiling_count(n)
        paths = counting.count_paths(2 * n + 4, 0, band)
        if 2 * tiles != paths:
            problems.append(f"n={n}: 2*{tiles} != {paths}")
        if 2 * tiles != axis_row[2 * n + 4]:
            problems.append(f"n={n}: tiling vs rational GF")
    return not problems, "; ".join(problems) or f"boards to 2x{2 * top}"


CHECKS: dict[str, Callable[[str], tuple[bool, str]]] = {
    "1-table-fixtures": check_table_fixtures,
    "2-sequence-fixtures": check_sequence_fixtures,
    "3-cross-engine": check_cross_engine,
    "4-bijections": check_bijections,
    "5-kernel-certificates": check_kernel_certificates,
    "6-threshold-law": check_threshold_law,
    "7-asymptotics": check_asymptotics,
    "8-step-refinement": check_step_refinement,
    "9-tiling": check_tiling,
}


def run_checks(level: str = "quick", only: str | None = None) -> Iterator[CheckResult]:
    if level not in ("quick", "full"):
        raise ValueError("level must be quick or full")
    for name, fn in CHECKS.items():
        if only is not None and only not in name:
            continue
        start = time.perf_counter()
        try:
            passed, detail = fn(level)
        except Exception as exc:  # engine bugs surface as failures, not crashes
            passed, detail = False, f"exception: {exc!r}"
        yield CheckResult(name, passed, detail, time.perf_counter() - start)
