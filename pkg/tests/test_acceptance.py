"""Acceptance gate: the nine verification criteria at full strength.

Each test prints one PASS/FAIL line (run with -s to see them all) and
asserts the criterion.  Tolerances are pinned here via the verification
module; nothing is deferred to later calibration.

Run:  pytest tests/test_acceptance.py -v -s
"""

from __future__ import annotations

import pytest

from knightpaths import verification


def _criterion(name: str) -> None:
    check = verification.CHECKS[name]
    passed, detail = check("full")
    print(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")
    assert passed, f"{name}: {detail}"


def test_criterion_1_table_fixtures():
    _criterion("1-table-fixtures")


def test_criterion_2_sequence_fixtures():
    _criterion("2-sequence-fixtures")


def test_criterion_3_cross_engine():
    _criterion("3-cross-engine")


def test_criterion_4_bijections():
    _criterion("4-bijections")


def test_criterion_5_kernel_certificates():
    _criterion("5-kernel-certificates")


def test_criterion_6_threshold_law():
    _criterion("6-threshold-law")


def test_criterion_7_asymptotics():
    # Known red: the nonnegative-altitude count ratio converges like
    # 1/sqrt(n) and sits near 1.018 at n = 200, outside the 1% gate pinned
    # here.  The gate is kept as stated rather than loosened to fit.
    _criterion("7-asymptotics")


def test_criterion_8_step_refinement():
    _criterion("8-step-refinement")


def test_criterion_9_tiling():
    _criterion("9-tiling")
