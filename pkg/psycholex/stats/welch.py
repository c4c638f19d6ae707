"""
Welch 双样本 t 检验

p 值由学生 t 分布给出: p = I_{df/(df+t^2)}(df/2, 1/2)，
正则化不完全 beta 函数用 Lentz 连分式求值。
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import structlog

from ..common.exceptions import StatsError


logger = structlog.get_logger(__name__)

DEFAULT_ALPHA = 0.001
CF_TOLERANCE = 1e-12
CF_MAX_ITERATIONS = 300
_TINY = 1e-300


@dataclass(frozen=True)
class WelchResult:
    """检验结果; df 在方差全为零时为 None"""
    t_statistic: float
    degrees_of_freedom: Optional[float]
    p_value: float
    significant_at: float
    mean_a: float
    mean_b: float
    n_a: int
    n_b: int
    degenerate: bool = False

    @property
    def significant(self) -> bool:
        return self.p_value < self.significant_at

    def to_dict(self) -> dict:
        return {
            "t_statistic": self.t_statistic,
            "degrees_of_freedom": self.degrees_of_freedom,
            "p_value": self.p_value,
            "significant_at": self.significant_at,
            "significant": self.significant,
            "mean_a": self.mean_a,
            "mean_b": self.mean_b,
            "n_a": self.n_a,
            "n_b": self.n_b,
            "degenerate": self.degenerate,
        }


def _beta_continued_fraction(a: float, b: float, x: float) -> float:
    """修正 Lentz 法求 I_x(a, b) 的连分式部分"""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _TINY:
        d = _TINY
    d = 1.0 / d
    h = d
    for m in range(1, CF_MAX_ITERATIONS + 1):
        m2 = 2 * m
        # 偶数项
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        h *= d * c
        # 奇数项
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < CF_TOLERANCE:
            return h
    logger.warning("incomplete_beta_not_converged", a=a, b=b, x=x, iterations=CF_MAX_ITERATIONS)
    return h


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """正则化不完全 beta 函数 I_x(a, b)"""
    if a <= 0 or b <= 0:
        raise StatsError("Incomplete beta requires positive shape parameters",
                         details={"a": a, "b": b})
    if x < 0.0 or x > 1.0:
        raise StatsError("Incomplete beta argument outside [0, 1]", details={"x": x})
    if x == 0.0 or x == 1.0:
        return x

    log_front = (math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
                 + a * math.log(x) + b * math.log1p(-x))
    front = math.exp(log_front)
    # 对称关系保证连分式快速收敛
    if x < (a + 1.0) / (a + b + 2.0):
        value = front * _beta_continued_fraction(a, b, x) / a
    else:
        value = 1.0 - front * _beta_continued_fraction(b, a, 1.0 - x) / b
    return min(max(value, 0.0), 1.0)


def student_t_two_sided(t: float, df: float) -> float:
    """双侧 p 值"""
    if math.isinf(t):
        return 0.0
    x = df / (df + t * t)
    return regularized_incomplete_beta(df / 2.0, 0.5, x)


def welch_t_test(a: Sequence[float], b: Sequence[float], alpha: float = DEFAULT_ALPHA) -> WelchResult:
    """Welch 双样本 t 检验 (样本方差, Welch-Satterthwaite 自由度)"""
    xa = np.asarray(a, dtype=float)
    xb = np.asarray(b, dtype=float)
    n_a, n_b = xa.size, xb.size
    if n_a < 2 or n_b < 2:
        raise StatsError("Welch test needs at least two observations per sample",
                         details={"n_a": int(n_a), "n_b": int(n_b)})
    if not (np.all(np.isfinite(xa)) and np.all(np.isfinite(xb))):
        raise StatsError("Welch test samples must be finite")

    mean_a = float(xa.mean())
    mean_b = float(xb.mean())
    se_a = float(xa.var(ddof=1)) / n_a if np.ptp(xa) > 0.0 else 0.0
    se_b = float(xb.var(ddof=1)) / n_b if np.ptp(xb) > 0.0 else 0.0
    se = se_a + se_b
    diff = mean_a - mean_b

    if se == 0.0:
        if diff == 0.0:
            return WelchResult(0.0, None, 1.0, alpha, mean_a, mean_b, n_a, n_b, degenerate=True)
        logger.warning("welch_zero_variance", mean_a=mean_a, mean_b=mean_b)
        t = math.copysign(math.inf, diff)
        return WelchResult(t, None, 0.0, alpha, mean_a, mean_b, n_a, n_b, degenerate=True)

    t = diff / math.sqrt(se)
    df = se * se / (se_a * se_a / (n_a - 1) + se_b * se_b / (n_b - 1))
    p = student_t_two_sided(t, df)
    return WelchResult(t, df, p, alpha, mean_a, mean_b, n_a, n_b)
