"""
组间显著性比较

正例对对照 (`*`) 与正例对正例 (`^`) 的 Welch 检验，不做多重比较校正。
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import structlog

from ..common.exceptions import StatsError
from .welch import DEFAULT_ALPHA, WelchResult, welch_t_test


logger = structlog.get_logger(__name__)


class ComparisonKind(str, Enum):
    CONTROL = "control"
    POSITIVE = "positive"

    @property
    def marker(self) -> str:
        return "*" if self is ComparisonKind.CONTROL else "^"


@dataclass(frozen=True)
class Comparison:
    feature: str
    group_a: str
    group_b: str
    kind: ComparisonKind
    result: Optional[WelchResult]
    skipped_reason: Optional[str] = None

    @property
    def significant(self) -> bool:
        return self.result is not None and self.result.significant

    @property
    def marker(self) -> str:
        """显著时的图上标记，否则为空串"""
        return self.kind.marker if self.significant else ""

    def to_row(self) -> Dict[str, object]:
        row: Dict[str, object] = {
            "feature": self.feature,
            "group_a": self.group_a,
            "group_b": self.group_b,
            "kind": self.kind.value,
            "marker": self.marker,
        }
        if self.result is None:
            row.update(t_statistic=None, degrees_of_freedom=None, p_value=None,
                       mean_a=None, mean_b=None, significant=False)
        else:
            r = self.result
            row.update(t_statistic=r.t_statistic, degrees_of_freedom=r.degrees_of_freedom,
                       p_value=r.p_value, mean_a=r.mean_a, mean_b=r.mean_b,
                       significant=r.significant)
        row["skipped_reason"] = self.skipped_reason
        return row


GroupPair = Tuple[str, str, ComparisonKind]


def comparison_pairs(cohort_pairs: Sequence[Tuple[str, str]]) -> List[GroupPair]:
    """(正例, 对照) 列表 -> 正例对对照 + 正例两两比较"""
    pairs: List[GroupPair] = [(p, c, ComparisonKind.CONTROL) for p, c in cohort_pairs]
    positives: List[str] = []
    for positive, _ in cohort_pairs:
        if positive not in positives:
            positives.append(positive)
    for i, first in enumerate(positives):
        for second in positives[i + 1:]:
            pairs.append((first, second, ComparisonKind.POSITIVE))
    return pairs


def compare_groups(
    samples: Mapping[str, Mapping[str, Sequence[float]]],
    features: Sequence[str],
    pairs: Sequence[GroupPair],
    alpha: float = DEFAULT_ALPHA,
) -> List[Comparison]:
    """samples: 类别 -> 特征 -> 用户级数值; 样本不足的比较记为跳过"""
    comparisons = []
    for feature in features:
        for group_a, group_b, kind in pairs:
            a = samples.get(group_a, {}).get(feature, ())
            b = samples.get(group_b, {}).get(feature, ())
            try:
                result = welch_t_test(a, b, alpha=alpha)
            except StatsError as exc:
                logger.warning("comparison_skipped", feature=feature, group_a=group_a,
                               group_b=group_b, reason=exc.message)
                comparisons.append(Comparison(feature, group_a, group_b, kind, None, exc.message))
                continue
            comparisons.append(Comparison(feature, group_a, group_b, kind, result))
    tested = sum(1 for c in comparisons if c.result is not None)
    logger.info("groups_compared", features=len(features), pairs=len(pairs), tests=tested)
    return comparisons
