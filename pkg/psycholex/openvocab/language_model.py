"""
Jelinek-Mercer 平滑一元语言模型、KL 散度与用户参考模型比较

P(w|D) = (1 - λ) · c(w, D) / |D| + λ · c(w, S) / |S|
其中 D 为目标类别所有文档的拼接，S 为参与比较的类别的并集。
"""

import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import structlog

from ..common.exceptions import VocabularyError
from ..corpus.models import Corpus, UserProfile
from ..corpus.sampling import sample_users
from .vocabulary import Vocabulary, build_vocabulary, count_words, union_collection


logger = structlog.get_logger(__name__)

DEFAULT_LAMBDA = 0.1


@dataclass(frozen=True, eq=False)
class LanguageModel:
    """共享支撑集上的平滑概率分布"""
    class_label: str
    collection_label: str
    support: Tuple[str, ...]
    probs: np.ndarray
    background: np.ndarray
    smoothing: float

    def __len__(self) -> int:
        return len(self.support)

    def prob(self, word: str) -> float:
        index = self._index().get(word)
        if index is None:
            raise VocabularyError(f"Word not in model support: {word}",
                                  details={"class_label": self.class_label})
        return float(self.probs[index])

    def _index(self) -> Dict[str, int]:
        cached = self.__dict__.get("_word_index")
        if cached is None:
            cached = {word: i for i, word in enumerate(self.support)}
            object.__setattr__(self, "_word_index", cached)
        return cached

    def as_dict(self) -> Dict[str, float]:
        return {word: float(p) for word, p in zip(self.support, self.probs)}


def _check_lambda(smoothing: float) -> None:
    if not 0.0 < smoothing < 1.0:
        raise VocabularyError("Smoothing lambda must be in (0, 1)", details={"lambda": smoothing})


def build_language_model(target: Vocabulary, collection: Vocabulary,
                         smoothing: float = DEFAULT_LAMBDA) -> LanguageModel:
    """在集合 S 的支撑集上为目标类别建立平滑模型"""
    _check_lambda(smoothing)
    if collection.total_tokens == 0:
        raise VocabularyError("Empty collection", details={"collection": collection.class_label})
    if target.total_tokens == 0:
        raise VocabularyError("Empty target vocabulary", details={"class_label": target.class_label})
    outside = [word for word in target.counts if word not in collection.counts]
    if outside:
        raise VocabularyError("Target vocabulary is not contained in the collection",
                              details={"class_label": target.class_label, "examples": outside[:5]})

    support = tuple(collection.counts)
    s_counts = np.fromiter((collection.counts[w] for w in support), dtype=np.float64, count=len(support))
    d_counts = np.fromiter((target.counts.get(w, 0) for w in support), dtype=np.float64, count=len(support))
    background = s_counts / collection.total_tokens
    probs = (1.0 - smoothing) * d_counts / target.total_tokens + smoothing * background

    return LanguageModel(
        class_label=target.class_label,
        collection_label=collection.class_label,
        support=support,
        probs=probs,
        background=background,
        smoothing=smoothing,
    )


def kl_divergence(p: LanguageModel, c: LanguageModel, log_base: float = math.e) -> float:
    """KL(P‖C) = Σ P(x) log(P(x)/C(x))，非对称"""
    if p.support != c.support:
        raise VocabularyError("Language models do not share the same support",
                              details={"p": p.class_label, "c": c.class_label})
    value = float(np.sum(p.probs * np.log(p.probs / c.probs)))
    if log_base != math.e:
        value /= math.log(log_base)
    # 浮点舍入可能给出 -1e-17 这样的值
    return max(value, 0.0)


class Nearest(str, Enum):
    """用户最接近的参考模型"""
    POSITIVE = "positive"
    CONTROL = "control"


@dataclass(frozen=True)
class ReferenceScore:
    """单个用户对正/对照参考模型的散度"""
    user_id: str
    class_label: str
    kl_to_positive: float
    kl_to_control: float
    nearest: Nearest


def user_language_model(user: UserProfile, reference: LanguageModel,
                        smoothing: float = DEFAULT_LAMBDA) -> Optional[LanguageModel]:
    """在参考模型的支撑集上为单个用户建立平滑模型，无可用词时返回 None"""
    _check_lambda(smoothing)
    counts = count_words([user])
    index = reference._index()
    # 支撑集外的词不参与，用户的 ML 估计在支撑集内重新归一
    d_counts = np.zeros(len(reference.support), dtype=np.float64)
    for word, n in counts.items():
        i = index.get(word)
        if i is not None:
            d_counts[i] = n
    total = d_counts.sum()
    if total == 0:
        return None
    probs = (1.0 - smoothing) * d_counts / total + smoothing * reference.background
    return LanguageModel(
        class_label=user.user_id,
        collection_label=reference.collection_label,
        support=reference.support,
        probs=probs,
        background=reference.background,
        smoothing=smoothing,
    )


def reference_lm_score(user: UserProfile, ref_positive: LanguageModel, ref_control: LanguageModel,
                       smoothing: float = DEFAULT_LAMBDA,
                       log_base: float = math.e) -> Optional[ReferenceScore]:
    """比较用户模型与正/对照参考模型，散度更小者为 nearest (相等时取 control)"""
    if ref_positive.support != ref_control.support:
        raise VocabularyError("Reference models do not share the same support")
    model = user_language_model(user, ref_positive, smoothing)
    if model is None:
        return None
    to_positive = kl_divergence(model, ref_positive, log_base)
    to_control = kl_divergence(model, ref_control, log_base)
    nearest = Nearest.POSITIVE if to_positive < to_control else Nearest.CONTROL
    return ReferenceScore(user.user_id, user.class_label, to_positive, to_control, nearest)


@dataclass(frozen=True)
class PairModels:
    """一组正/对照比较的词表与模型"""
    positive: Vocabulary
    control: Vocabulary
    collection: Vocabulary
    positive_model: LanguageModel
    control_model: LanguageModel


def build_pair_models(positive: Vocabulary, control: Vocabulary,
                      smoothing: float = DEFAULT_LAMBDA) -> PairModels:
    """以两类并集为 S 建立两类模型"""
    collection = union_collection([positive, control])
    return PairModels(
        positive=positive,
        control=control,
        collection=collection,
        positive_model=build_language_model(positive, collection, smoothing),
        control_model=build_language_model(control, collection, smoothing),
    )


@dataclass(frozen=True)
class ReferenceExperiment:
    """按比例抽样用户与参考模型比较的结果"""
    positive: str
    control: str
    fraction: float
    scores: List[ReferenceScore]
    skipped_users: List[str]

    def class_means(self) -> Dict[str, Dict[str, float]]:
        """每个类别的平均散度"""
        means: Dict[str, Dict[str, float]] = {}
        for label in (self.positive, self.control):
            rows = [s for s in self.scores if s.class_label == label]
            if not rows:
                continue
            means[label] = {
                "kl_to_positive": sum(s.kl_to_positive for s in rows) / len(rows),
                "kl_to_control": sum(s.kl_to_control for s in rows) / len(rows),
                "nearest_positive": sum(s.nearest == Nearest.POSITIVE for s in rows) / len(rows),
                "users": float(len(rows)),
            }
        return means


def reference_experiment(corpus: Corpus, positive: str, control: str,
                         fraction: float = 0.1,
                         smoothing: float = DEFAULT_LAMBDA,
                         seed: int = 42,
                         log_base: float = math.e,
                         models: Optional[PairModels] = None) -> ReferenceExperiment:
    """对两个类别各抽样一部分用户，计算其对两个参考模型的散度"""
    if models is None:
        models = build_pair_models(build_vocabulary(corpus, positive),
                                   build_vocabulary(corpus, control), smoothing)
    scores: List[ReferenceScore] = []
    skipped: List[str] = []
    for offset, label in enumerate((positive, control)):
        for user in sample_users(corpus, label, fraction, seed + offset):
            score = reference_lm_score(user, models.positive_model, models.control_model,
                                       smoothing, log_base)
            if score is None:
                skipped.append(user.user_id)
                continue
            # 派生语料中的类别名以比较时的名字为准
            if score.class_label != label:
                score = ReferenceScore(score.user_id, label, score.kl_to_positive,
                                       score.kl_to_control, score.nearest)
            scores.append(score)
    if skipped:
        logger.warning("reference_users_without_words", users=len(skipped))
    logger.info("reference_experiment_done", positive=positive, control=control,
                scored=len(scores), fraction=fraction)
    return ReferenceExperiment(positive, control, fraction, scores, skipped)


@dataclass(frozen=True)
class RankCurves:
    """语言模型曲线数据：按集合概率降序排列的词"""
    words: Tuple[str, ...]
    series: Dict[str, Tuple[float, ...]]


def rank_curves(models: Sequence[LanguageModel], top_n: Optional[int] = None) -> RankCurves:
    """按背景 (集合) 概率排序词，并给出每个模型在这些词上的概率

    各模型共用一条按合并集合概率降序的横轴 (并列按字典序)，
    同一横坐标在每条曲线上对应同一个词，曲线之间可以逐词比较。
    各曲线自身因此不一定单调。
    """
    if not models:
        raise VocabularyError("No language models to plot")
    first = models[0]
    for model in models[1:]:
        if model.support != first.support:
            raise VocabularyError("Language models do not share the same support")
    order = sorted(range(len(first.support)), key=lambda i: (-first.background[i], first.support[i]))
    if top_n is not None:
        order = order[:top_n]
    words = tuple(first.support[i] for i in order)
    series = {model.class_label: tuple(float(model.probs[i]) for i in order) for model in models}
    return RankCurves(words, series)
