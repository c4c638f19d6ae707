"""
类别词表与 Jaccard 比较
"""

from collections import Counter
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import FrozenSet, Iterable, List, Mapping, Optional, Tuple

import structlog

from ..common.exceptions import VocabularyError
from ..corpus.models import Corpus, UserProfile


logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class Vocabulary:
    """某类别的词集合与词频"""
    class_label: str
    counts: Mapping[str, int]
    total_tokens: int = field(init=False)

    def __post_init__(self) -> None:
        counts = {word: int(n) for word, n in self.counts.items() if n}
        if any(n < 0 for n in counts.values()):
            raise VocabularyError("Vocabulary counts must be positive",
                                  details={"class_label": self.class_label})
        object.__setattr__(self, "counts", MappingProxyType(dict(sorted(counts.items()))))
        object.__setattr__(self, "total_tokens", sum(counts.values()))

    @property
    def words(self) -> FrozenSet[str]:
        return frozenset(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def merge(self, other: 'Vocabulary', class_label: Optional[str] = None) -> 'Vocabulary':
        """多重集并 (词频相加)"""
        merged = Counter(self.counts)
        merged.update(other.counts)
        return Vocabulary(class_label or f"{self.class_label}+{other.class_label}", merged)


def count_words(users: Iterable[UserProfile]) -> Counter:
    """累计用户文档中的规范化词"""
    counts: Counter = Counter()
    for user in users:
        for doc in user.documents:
            counts.update(doc.scan.words)
    return counts


def build_vocabulary(corpus: Corpus, class_label: str) -> Vocabulary:
    """构建类别词表"""
    users = corpus.cohort(class_label)
    vocabulary = Vocabulary(class_label, count_words(users))
    logger.debug("vocabulary_built", class_label=class_label,
                 words=len(vocabulary), tokens=vocabulary.total_tokens)
    return vocabulary


def union_collection(vocabularies: Iterable[Vocabulary], class_label: Optional[str] = None) -> Vocabulary:
    """比较集合 S：参与比较的各类别词频之和"""
    vocabularies = list(vocabularies)
    if not vocabularies:
        raise VocabularyError("No vocabularies to merge")
    merged: Counter = Counter()
    for vocabulary in vocabularies:
        merged.update(vocabulary.counts)
    label = class_label or "+".join(v.class_label for v in vocabularies)
    return Vocabulary(label, merged)


@dataclass(frozen=True)
class VocabularyComparison:
    """两个词表的集合比较"""
    positive: str
    control: str
    positive_size: int
    control_size: int
    intersection: int
    union: int
    only_positive: int
    only_control: int
    jaccard: Optional[float]


def jaccard(p: Vocabulary, c: Vocabulary) -> VocabularyComparison:
    """Jaccard 指数 |P∩C| / |P∪C|，两个空集时为 None"""
    p_words, c_words = p.words, c.words
    union = len(p_words | c_words)
    intersection = len(p_words & c_words)
    return VocabularyComparison(
        positive=p.class_label,
        control=c.class_label,
        positive_size=len(p_words),
        control_size=len(c_words),
        intersection=intersection,
        union=union,
        only_positive=len(p_words - c_words),
        only_control=len(c_words - p_words),
        jaccard=intersection / union if union else None,
    )


def distinctive_words(p: Vocabulary, c: Vocabulary, top_n: int = 20) -> List[Tuple[str, int]]:
    """只出现在 P 中的高频词"""
    exclusive = [(word, n) for word, n in p.counts.items() if word not in c.counts]
    exclusive.sort(key=lambda item: (-item[1], item[0]))
    return exclusive[:top_n]
