"""
统计内核测试

p 值、Pearson 与 Spearman 以 SciPy 作为独立对照。
"""

import math

import numpy as np
import pytest
from scipy import special
from scipy import stats as sps

from psycholex.common.exceptions import StatsError
from psycholex.stats import (
    ComparisonKind,
    box_stats,
    compare_groups,
    comparison_pairs,
    emotion_correlation_matrix,
    pearson,
    regularized_incomplete_beta,
    spearman,
    welch_t_test,
)


# ------------------------------------------------------------------ Welch

def test_welch_hand_computed():
    result = welch_t_test([1, 2, 3, 4], [2, 3, 4, 5])
    assert result.t_statistic == pytest.approx(-1.095445, abs=1e-6)
    assert result.degrees_of_freedom == pytest.approx(6.0, abs=1e-9)
    assert result.p_value == pytest.approx(0.3153, abs=1e-4)
    assert not result.significant


def test_welch_matches_scipy():
    rng = np.random.default_rng(2024)
    for _ in range(200):
        n_a, n_b = rng.integers(2, 40, size=2)
        a = rng.normal(0.0, rng.uniform(0.1, 3.0), n_a)
        b = rng.normal(rng.uniform(-2, 2), rng.uniform(0.1, 3.0), n_b)
        ours = welch_t_test(a, b)
        ref = sps.ttest_ind(a, b, equal_var=False)
        assert ours.t_statistic == pytest.approx(ref.statistic, rel=1e-9)
        assert ours.p_value == pytest.approx(ref.pvalue, abs=1e-6)


def test_welch_significance_threshold():
    a = [0.1, 0.12, 0.11, 0.09, 0.1, 0.11] * 5
    b = [0.5, 0.52, 0.49, 0.51, 0.5, 0.48] * 5
    result = welch_t_test(a, b, alpha=0.001)
    assert result.p_value < 0.001
    assert result.significant


def test_welch_swap_mirrors_and_scale_invariant():
    rng = np.random.default_rng(31)
    for _ in range(100):
        a = rng.normal(0.0, 1.0, int(rng.integers(2, 30)))
        b = rng.normal(0.5, 2.0, int(rng.integers(2, 30)))
        forward = welch_t_test(a, b)
        swapped = welch_t_test(b, a)
        assert swapped.t_statistic == pytest.approx(-forward.t_statistic, rel=1e-12)
        assert swapped.degrees_of_freedom == pytest.approx(forward.degrees_of_freedom, rel=1e-12)
        assert swapped.p_value == pytest.approx(forward.p_value, rel=1e-9, abs=1e-15)
        k = rng.uniform(0.01, 100.0)
        scaled = welch_t_test(a * k, b * k)
        assert scaled.t_statistic == pytest.approx(forward.t_statistic, rel=1e-9)
        assert scaled.p_value == pytest.approx(forward.p_value, rel=1e-6, abs=1e-12)


def test_welch_constant_floats_are_degenerate():
    result = welch_t_test([0.1] * 3, [0.7] * 7)
    assert result.degenerate
    assert result.p_value == 0.0


def test_welch_zero_variance_equal_means():
    result = welch_t_test([1.0, 1.0], [1.0, 1.0, 1.0])
    assert result.degenerate
    assert (result.t_statistic, result.degrees_of_freedom, result.p_value) == (0.0, None, 1.0)


def test_welch_zero_variance_different_means():
    result = welch_t_test([1.0, 1.0], [2.0, 2.0])
    assert result.degenerate
    assert result.t_statistic == -math.inf
    assert result.p_value == 0.0


@pytest.mark.parametrize("a,b", [([1.0], [1.0, 2.0]), ([1.0, float("nan")], [1.0, 2.0])])
def test_welch_rejects_bad_samples(a, b):
    with pytest.raises(StatsError):
        welch_t_test(a, b)


def test_incomplete_beta_matches_scipy():
    rng = np.random.default_rng(7)
    for _ in range(200):
        a, b = rng.uniform(0.1, 50, size=2)
        x = rng.uniform(0, 1)
        assert regularized_incomplete_beta(a, b, x) == pytest.approx(special.betainc(a, b, x), abs=1e-9)


def test_incomplete_beta_edges():
    assert regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0
    assert regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0
    with pytest.raises(StatsError):
        regularized_incomplete_beta(2.0, 3.0, 1.5)
    with pytest.raises(StatsError):
        regularized_incomplete_beta(0.0, 3.0, 0.5)


# ------------------------------------------------------------------ 相关

def test_pearson_hand_computed():
    assert pearson([1, 2, 3, 4], [1, 3, 2, 4]) == pytest.approx(0.8, abs=1e-12)


def test_pearson_zero_variance():
    assert pearson([1, 1, 1], [1, 2, 3]) is None


@pytest.mark.parametrize("constant,other", [
    ([0.1, 0.1, 0.1], [1, 2, 3]),
    ([0.7] * 7, [1, 2, 3, 4, 5, 6, 8]),
    ([1 / 3] * 5, [0.2, 0.1, 0.4, 0.3, 0.9]),
])
def test_constant_float_column_has_no_correlation(constant, other):
    assert pearson(constant, other) is None
    assert pearson(other, constant) is None
    assert spearman(constant, other) is None


def test_pearson_affine_invariance_and_negation():
    rng = np.random.default_rng(11)
    for _ in range(100):
        n = int(rng.integers(3, 25))
        x = rng.normal(size=n)
        y = x * rng.uniform(-1, 1) + rng.normal(size=n)
        r = pearson(x, y)
        a, b = rng.uniform(0.1, 10.0), rng.uniform(-5.0, 5.0)
        assert pearson(a * x + b, y) == pytest.approx(r, abs=1e-9)
        assert pearson(x, a * y + b) == pytest.approx(r, abs=1e-9)
        assert pearson(-x, y) == pytest.approx(-r, abs=1e-12)


def test_pearson_and_spearman_match_scipy():
    rng = np.random.default_rng(5)
    for _ in range(200):
        n = int(rng.integers(3, 30))
        x = rng.normal(size=n)
        y = 0.5 * x + rng.normal(size=n)
        assert pearson(x, y) == pytest.approx(sps.pearsonr(x, y)[0], rel=1e-9, abs=1e-12)
        assert spearman(x, y) == pytest.approx(sps.spearmanr(x, y)[0], rel=1e-9, abs=1e-12)


def test_spearman_with_ties():
    x = [1, 2, 2, 3, 4]
    y = [2, 1, 3, 3, 5]
    assert spearman(x, y) == pytest.approx(sps.spearmanr(x, y)[0], rel=1e-9, abs=1e-12)


def test_correlation_length_mismatch():
    with pytest.raises(StatsError):
        pearson([1, 2], [1, 2, 3])


def test_correlation_matrix():
    labels = ["joy", "sadness", "anger"]
    vectors = [
        {"joy": 0.9, "sadness": 0.1, "anger": 0.0},
        {"joy": 0.5, "sadness": 0.5, "anger": 0.0},
        {"joy": 0.2, "sadness": 0.8, "anger": 0.0},
    ]
    matrix = emotion_correlation_matrix(vectors, labels, "pearson", "p")
    assert matrix.get("joy", "joy") == 1.0
    assert matrix.get("joy", "sadness") == pytest.approx(-1.0)
    assert matrix.get("sadness", "joy") == matrix.get("joy", "sadness")
    # 零方差的情绪整行为空
    assert matrix.get("anger", "anger") is None
    assert matrix.get("joy", "anger") is None
    assert matrix.users == 3


def test_correlation_matrix_symmetry_random():
    rng = np.random.default_rng(1)
    labels = [f"e{i}" for i in range(6)]
    vectors = [{label: float(v) for label, v in zip(labels, rng.random(6))} for _ in range(12)]
    for method in ("pearson", "spearman"):
        matrix = emotion_correlation_matrix(vectors, labels, method)
        values = np.array(matrix.values, dtype=float)
        assert np.allclose(values, values.T)
        assert np.allclose(np.diag(values), 1.0)
        assert np.all(np.abs(values) <= 1.0)


def test_correlation_matrix_needs_two_users():
    with pytest.raises(StatsError):
        emotion_correlation_matrix([{"joy": 1.0}], ["joy"])


def test_unknown_method():
    with pytest.raises(StatsError):
        emotion_correlation_matrix([{"joy": 1.0}, {"joy": 0.0}], ["joy"], "kendall")


# ------------------------------------------------------------------ 箱线图

def test_box_stats_one_to_nine():
    box = box_stats(range(1, 10))
    assert (box.q1, box.median, box.q3) == (3.0, 5.0, 7.0)
    assert (box.lower_whisker, box.upper_whisker) == (1.0, 9.0)
    assert box.outliers == []


def test_box_stats_outlier():
    box = box_stats([1, 2, 3, 4, 100])
    assert box.outliers == [100.0]
    assert box.upper_whisker == 4.0
    assert box.maximum == 100.0


def test_box_stats_constant():
    box = box_stats([2.5] * 4)
    assert {box.minimum, box.q1, box.median, box.q3, box.maximum} == {2.5}
    assert box.outliers == []


def test_box_stats_empty():
    with pytest.raises(StatsError):
        box_stats([])


# ------------------------------------------------------------------ 组间比较

def test_comparison_pairs():
    pairs = comparison_pairs([("dep", "ctl_d"), ("ano", "ctl_a")])
    assert pairs == [
        ("dep", "ctl_d", ComparisonKind.CONTROL),
        ("ano", "ctl_a", ComparisonKind.CONTROL),
        ("dep", "ano", ComparisonKind.POSITIVE),
    ]


def test_compare_groups_markers_and_skips():
    samples = {
        "dep": {"i": [0.5, 0.52, 0.49, 0.51] * 5, "we": [0.1]},
        "ctl": {"i": [0.1, 0.12, 0.11, 0.09] * 5, "we": [0.1, 0.2]},
    }
    pairs = comparison_pairs([("dep", "ctl")])
    comparisons = compare_groups(samples, ["i", "we"], pairs, alpha=0.001)
    by_feature = {c.feature: c for c in comparisons}
    assert by_feature["i"].marker == "*"
    assert by_feature["i"].to_row()["significant"] is True
    assert by_feature["we"].result is None
    assert by_feature["we"].skipped_reason
    assert by_feature["we"].marker == ""
