"""
箱线图描述统计 (type-7 线性插值分位数, 1.5·IQR 须线)
"""

from dataclasses import dataclass, field
from typing import List, Sequence

import numpy as np

from ..common.exceptions import StatsError


WHISKER_FACTOR = 1.5


@dataclass(frozen=True)
class BoxStats:
    minimum: float
    q1: float
    median: float
    q3: float
    maximum: float
    lower_whisker: float
    upper_whisker: float
    mean: float
    n: int
    outliers: List[float] = field(default_factory=list)

    @property
    def iqr(self) -> float:
        return self.q3 - self.q1

    def to_dict(self) -> dict:
        return {
            "min": self.minimum,
            "q1": self.q1,
            "median": self.median,
            "q3": self.q3,
            "max": self.maximum,
            "lower_whisker": self.lower_whisker,
            "upper_whisker": self.upper_whisker,
            "mean": self.mean,
            "n": self.n,
            "outliers": list(self.outliers),
        }


def box_stats(sample: Sequence[float]) -> BoxStats:
    values = np.sort(np.asarray(sample, dtype=float))
    if values.size == 0:
        raise StatsError("Box statistics need a non-empty sample")
    q1, median, q3 = (float(q) for q in np.quantile(values, [0.25, 0.5, 0.75], method="linear"))
    iqr = q3 - q1
    low_fence = q1 - WHISKER_FACTOR * iqr
    high_fence = q3 + WHISKER_FACTOR * iqr
    inside = values[(values >= low_fence) & (values <= high_fence)]
    outliers = values[(values < low_fence) | (values > high_fence)]
    return BoxStats(
        minimum=float(values[0]),
        q1=q1,
        median=median,
        q3=q3,
        maximum=float(values[-1]),
        lower_whisker=float(inside[0]),
        upper_whisker=float(inside[-1]),
        mean=float(values.mean()),
        n=int(values.size),
        outliers=[float(v) for v in outliers],
    )
