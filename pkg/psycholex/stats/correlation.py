"""
相关系数与情绪相关矩阵
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
from scipy.stats import rankdata

from ..common.exceptions import StatsError


CORRELATION_METHODS = ("pearson", "spearman")


def _check_pair(x: Sequence[float], y: Sequence[float]) -> None:
    if len(x) != len(y):
        raise StatsError("Correlation inputs differ in length",
                         details={"len_x": len(x), "len_y": len(y)})
    if len(x) < 2:
        raise StatsError("Correlation needs at least two observations",
                         details={"n": len(x)})


def pearson(x: Sequence[float], y: Sequence[float]) -> Optional[float]:
    """积矩相关系数，任一方差为零时返回 None"""
    _check_pair(x, y)
    ax = np.asarray(x, dtype=float)
    ay = np.asarray(y, dtype=float)
    # 常数列在原始值上判断，去均值后的残差不一定恰为零
    if np.ptp(ax) == 0.0 or np.ptp(ay) == 0.0:
        return None
    dx = ax - ax.mean()
    dy = ay - ay.mean()
    sxx = float(np.dot(dx, dx))
    syy = float(np.dot(dy, dy))
    r = float(np.dot(dx, dy)) / np.sqrt(sxx * syy)
    return float(np.clip(r, -1.0, 1.0))


def spearman(x: Sequence[float], y: Sequence[float]) -> Optional[float]:
    """秩相关 (平均秩处理并列)"""
    _check_pair(x, y)
    return pearson(rankdata(x), rankdata(y))


def correlation_function(method: str) -> Callable[[Sequence[float], Sequence[float]], Optional[float]]:
    if method == "pearson":
        return pearson
    if method == "spearman":
        return spearman
    raise StatsError(f"Unknown correlation method: {method}",
                     details={"available": list(CORRELATION_METHODS)})


@dataclass(frozen=True)
class CorrelationMatrix:
    """对称矩阵; 零方差的情绪整行整列为 None"""
    class_label: str
    labels: List[str]
    values: List[List[Optional[float]]]
    method: str = "pearson"
    users: int = 0

    def get(self, row: str, col: str) -> Optional[float]:
        return self.values[self.labels.index(row)][self.labels.index(col)]

    def to_dict(self) -> dict:
        return {
            "class_label": self.class_label,
            "labels": list(self.labels),
            "values": [list(row) for row in self.values],
            "method": self.method,
            "users": self.users,
        }


def emotion_correlation_matrix(
    vectors: Sequence[Dict[str, float]],
    labels: Sequence[str],
    method: str = "pearson",
    class_label: str = "",
) -> CorrelationMatrix:
    """用户级情绪向量 (情绪 -> 数值) 的两两相关矩阵"""
    if len(vectors) < 2:
        raise StatsError("Correlation matrix needs at least two users",
                         details={"class_label": class_label, "users": len(vectors)})
    corr = correlation_function(method)
    columns = {label: [float(v.get(label, 0.0)) for v in vectors] for label in labels}
    degenerate = {label for label, col in columns.items() if np.ptp(col) == 0.0}

    size = len(labels)
    values: List[List[Optional[float]]] = [[None] * size for _ in range(size)]
    for i, row in enumerate(labels):
        if row in degenerate:
            continue
        values[i][i] = 1.0
        for j in range(i + 1, size):
            col = labels[j]
            if col in degenerate:
                continue
            r = corr(columns[row], columns[col])
            values[i][j] = values[j][i] = r
    return CorrelationMatrix(class_label, list(labels), values, method, len(vectors))
