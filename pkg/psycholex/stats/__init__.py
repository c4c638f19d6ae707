"""
统计内核

Welch t 检验、相关系数与相关矩阵、箱线图描述统计
"""

from .correlation import (
    CORRELATION_METHODS,
    CorrelationMatrix,
    correlation_function,
    emotion_correlation_matrix,
    pearson,
    spearman,
)
from .descriptive import BoxStats, box_stats
from .significance import Comparison, ComparisonKind, compare_groups, comparison_pairs
from .welch import (
    DEFAULT_ALPHA,
    WelchResult,
    regularized_incomplete_beta,
    student_t_two_sided,
    welch_t_test,
)

__all__ = [
    "CORRELATION_METHODS",
    "CorrelationMatrix",
    "correlation_function",
    "emotion_correlation_matrix",
    "pearson",
    "spearman",
    "BoxStats",
    "box_stats",
    "Comparison",
    "ComparisonKind",
    "compare_groups",
    "comparison_pairs",
    "DEFAULT_ALPHA",
    "WelchResult",
    "regularized_incomplete_beta",
    "student_t_two_sided",
    "welch_t_test",
]
