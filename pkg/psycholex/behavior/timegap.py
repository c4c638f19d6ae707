"""
发帖时间间隔

用户平均间隔为 n-1 个相邻间隔的均值，n < 2 时无定义。
按月聚合时，每个间隔归入较早那篇文档的 UTC 月份 (按月份合并各年)。
"""

import math
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import structlog

from ..common.exceptions import ConfigurationError
from ..corpus.models import Corpus, UserProfile


logger = structlog.get_logger(__name__)

MONTHS = tuple(range(1, 13))
SECONDS_PER_HOUR = 3600.0
GAP_CHUNK_USERS = 256

Mapper = Callable[[Callable[[Sequence[UserProfile]], Dict[int, 'GapAccumulator']],
                   Sequence[Sequence[UserProfile]]], Iterable[Dict[int, 'GapAccumulator']]]


def consecutive_gaps(user: UserProfile) -> Iterator[Tuple[int, float]]:
    """(较早文档的月份, 间隔秒数)"""
    docs = user.documents
    for earlier, later in zip(docs, docs[1:]):
        yield earlier.timestamp.month, float(later.epoch_seconds - earlier.epoch_seconds)


def mean_time_gap(user: UserProfile) -> Optional[float]:
    """平均发帖间隔 (秒)，少于两篇文档时为 None"""
    gaps = [gap for _, gap in consecutive_gaps(user)]
    if not gaps:
        return None
    return sum(gaps) / len(gaps)


@dataclass
class GapAccumulator:
    """(count, mean, M2) 形式的在线统计，可结合地合并"""
    count: int = 0
    mean: float = 0.0
    m2: float = 0.0

    def add(self, value: float) -> None:
        self.count += 1
        delta = value - self.mean
        self.mean += delta / self.count
        self.m2 += delta * (value - self.mean)

    def merge(self, other: 'GapAccumulator') -> 'GapAccumulator':
        if other.count == 0:
            return GapAccumulator(self.count, self.mean, self.m2)
        if self.count == 0:
            return GapAccumulator(other.count, other.mean, other.m2)
        count = self.count + other.count
        delta = other.mean - self.mean
        mean = self.mean + delta * other.count / count
        m2 = self.m2 + other.m2 + delta * delta * self.count * other.count / count
        return GapAccumulator(count, mean, m2)

    @property
    def population_std(self) -> float:
        if self.count == 0:
            return 0.0
        return math.sqrt(max(self.m2 / self.count, 0.0))


@dataclass(frozen=True)
class GapCell:
    """某类别某月的统计"""
    mean: float
    std: float
    count: int


@dataclass(frozen=True)
class MonthlyGapTable:
    """类别 -> 月份 -> 间隔统计，无数据的月份不出现"""
    cells: Mapping[str, Mapping[int, GapCell]]

    @property
    def class_labels(self) -> List[str]:
        return list(self.cells)

    def is_empty(self) -> bool:
        return not any(self.cells.values())

    def cell(self, class_label: str, month: int) -> Optional[GapCell]:
        return self.cells.get(class_label, {}).get(month)

    def to_dict(self) -> Dict[str, Dict[str, Dict[str, float]]]:
        return {
            label: {str(month): {"mean": c.mean, "std": c.std, "count": c.count}
                    for month, c in months.items()}
            for label, months in self.cells.items()
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Mapping[str, Mapping[str, float]]]) -> 'MonthlyGapTable':
        cells = {
            label: {int(month): GapCell(float(c["mean"]), float(c["std"]), int(c["count"]))
                    for month, c in sorted(months.items(), key=lambda item: int(item[0]))}
            for label, months in data.items()
        }
        return cls(cells)

    def rows(self) -> List[Dict[str, object]]:
        """表格行 (小时为单位)"""
        rows = []
        for label, months in self.cells.items():
            for month in sorted(months):
                cell = months[month]
                rows.append({
                    "class_label": label,
                    "month": month,
                    "mean_gap_hours": cell.mean / SECONDS_PER_HOUR,
                    "std_gap_hours": cell.std / SECONDS_PER_HOUR,
                    "gaps": cell.count,
                })
        return rows


def accumulate_gaps(users: Iterable[UserProfile]) -> Dict[int, GapAccumulator]:
    """一组用户的按月累加"""
    accumulators: Dict[int, GapAccumulator] = {}
    for user in users:
        for month, gap in consecutive_gaps(user):
            accumulators.setdefault(month, GapAccumulator()).add(gap)
    return accumulators


def merge_monthly(parts: Iterable[Mapping[int, GapAccumulator]]) -> Dict[int, GapAccumulator]:
    """按给定顺序合并各分块的按月累加"""
    merged: Dict[int, GapAccumulator] = {}
    for part in parts:
        for month, acc in part.items():
            merged[month] = merged.get(month, GapAccumulator()).merge(acc)
    return merged


def monthly_gap_table(corpus: Corpus, classes: Sequence[str],
                      mapper: Optional[Mapper] = None) -> MonthlyGapTable:
    """按类别与月份聚合间隔的均值、总体标准差与样本数

    用户按固定大小分块累加后再合并；mapper 须保持顺序 (如线程池的 map)，
    分块与合并顺序不随工作线程数变化，结果因此一致。
    """
    if not classes:
        raise ConfigurationError("Monthly gap table needs at least one class",
                                 details={"classes": list(classes)})
    run = mapper or (lambda fn, items: list(map(fn, items)))
    cells: Dict[str, Dict[int, GapCell]] = {}
    for label in classes:
        users = corpus.cohort(label)
        chunks = [users[i:i + GAP_CHUNK_USERS] for i in range(0, len(users), GAP_CHUNK_USERS)]
        accumulators = merge_monthly(run(accumulate_gaps, chunks))
        cells[label] = {
            month: GapCell(acc.mean, acc.population_std, acc.count)
            for month, acc in sorted(accumulators.items())
            if acc.count > 0
        }
        logger.debug("monthly_gaps_built", class_label=label, months=len(cells[label]))
    return MonthlyGapTable(cells)
