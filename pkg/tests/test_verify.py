from __future__ import annotations

import numpy as np
import pytest

from qrm.verify import FAIL, PASS, SKIP, CheckResult, check_distances, run_checks, walsh_hadamard


def test_walsh_hadamard_matches_dense_matrix():
    h = np.array([[1]])
    for _ in range(4):
        h = np.block([[h, h], [h, -h]])
    vec = np.random.default_rng(0).integers(-1, 2, size=16)
    np.testing.assert_array_equal(walsh_hadamard(vec), h @ vec)


def test_run_checks_small_order_all_pass():
    results = list(run_checks(4, cap=20))
    assert results and all(r.status in (PASS, SKIP) for r in results)
    names = " ".join(r.name for r in results)
    for expected in ("MacWilliams", "squaring", "states of [[4,2,2]]", "P_q"):
        assert expected in names


def test_distance_check_reports_skips_above_cap():
    results = list(check_distances(5, cap=6))
    assert [r.status for r in results] == [PASS, SKIP]


def test_result_line_format():
    assert CheckResult(FAIL, "x", "why").line() == "FAIL x: why"
    assert CheckResult(PASS, "y").line() == "PASS y"


def test_rejects_small_order():
    with pytest.raises(ValueError):
        list(run_checks(1))
