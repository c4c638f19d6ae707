"""
封闭词表打分

类别：每个用户中至少含一个类别词的文档比例。
情感：每个用户中至少含一个与某情感关联的词的文档数与比例。
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Union

import structlog

from ..corpus.models import Corpus
from .loaders import EMOTIONS, CategoryLexicon, CategoryMatcher, EmotionLexicon


logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class UserCategoryProfile:
    user_id: str
    class_label: str
    documents: int
    proportions: Mapping[str, float]


@dataclass(frozen=True)
class UserEmotionStats:
    user_id: str
    class_label: str
    documents: int
    counts: Mapping[str, int]
    fractions: Mapping[str, float]


def match_category(tokens: Iterable[str], entries: Union[CategoryMatcher, Iterable[str]]) -> bool:
    """任一 token 等于字面词条或以前缀词条的词干开头"""
    matcher = entries if isinstance(entries, CategoryMatcher) else CategoryMatcher.from_entries(entries)
    return matcher.matches(tokens)


def category_profiles(corpus: Corpus, class_label: str, lexicon: CategoryLexicon,
                      categories: Optional[Sequence[str]] = None) -> List[UserCategoryProfile]:
    """逐用户计算各类别的文档比例"""
    names = list(categories) if categories else lexicon.category_names
    matchers = [(name, lexicon.matcher(name)) for name in names]
    profiles = []
    for user in corpus.cohort(class_label):
        if not user.documents:
            logger.warning("user_without_documents", user_id=user.user_id, class_label=class_label)
            continue
        hits = dict.fromkeys(names, 0)
        for doc in user.documents:
            words = set(doc.scan.words)
            if not words:
                continue
            for name, matcher in matchers:
                if matcher.matches(words):
                    hits[name] += 1
        n = len(user.documents)
        profiles.append(UserCategoryProfile(
            user_id=user.user_id,
            class_label=class_label,
            documents=n,
            proportions={name: hits[name] / n for name in names},
        ))
    logger.debug("category_profiles_built", class_label=class_label, users=len(profiles),
                 categories=len(names))
    return profiles


def emotion_document_stats(corpus: Corpus, class_label: str,
                           emo_lexicon: EmotionLexicon) -> List[UserEmotionStats]:
    """逐用户统计含各情感词的文档数"""
    stats = []
    for user in corpus.cohort(class_label):
        if not user.documents:
            logger.warning("user_without_documents", user_id=user.user_id, class_label=class_label)
            continue
        counts = dict.fromkeys(EMOTIONS, 0)
        for doc in user.documents:
            labels = set()
            for word in set(doc.scan.words):
                labels.update(emo_lexicon.emotions_of(word))
            for label in labels:
                counts[label] += 1
        n = len(user.documents)
        stats.append(UserEmotionStats(
            user_id=user.user_id,
            class_label=class_label,
            documents=n,
            counts=counts,
            fractions={label: counts[label] / n for label in EMOTIONS},
        ))
    return stats


def class_emotion_means(stats: Sequence[UserEmotionStats]) -> Dict[str, float]:
    """类别平均 (雷达图的取值)：用户含情感词文档数的均值"""
    if not stats:
        return dict.fromkeys(EMOTIONS, 0.0)
    return {label: sum(s.counts[label] for s in stats) / len(stats) for label in EMOTIONS}
