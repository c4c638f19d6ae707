"""
行为分析模块

互动标记的用户级分布与按月份聚合的发帖时间间隔
"""

from .profiles import (
    RATIO_FEATURES,
    UserBehaviorProfile,
    behavior_features,
    behavior_profiles,
    feature_sample,
    not_applicable_markers,
)
from .timegap import (
    GapAccumulator,
    GapCell,
    MonthlyGapTable,
    accumulate_gaps,
    consecutive_gaps,
    merge_monthly,
    mean_time_gap,
    monthly_gap_table,
)

__all__ = [
    "RATIO_FEATURES",
    "UserBehaviorProfile",
    "behavior_features",
    "behavior_profiles",
    "feature_sample",
    "not_applicable_markers",
    "GapAccumulator",
    "GapCell",
    "MonthlyGapTable",
    "accumulate_gaps",
    "consecutive_gaps",
    "merge_monthly",
    "mean_time_gap",
    "monthly_gap_table",
]
