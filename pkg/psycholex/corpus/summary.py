"""
语料概要统计 (用户数、文档数、人均文档、篇均词数、活跃天数)
"""

from dataclasses import dataclass, asdict
from typing import List, Optional, Sequence

import pandas as pd
import structlog

from ..textscan.tokenizer import whitespace_token_count
from .models import Corpus


logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class CohortSummary:
    """单个类别的概要"""
    class_label: str
    users: int
    documents: int
    docs_per_user: float
    words_per_document: float
    activity_days: float
    empty_documents: int
    empty_cohort: bool = False


@dataclass(frozen=True)
class SummaryTable:
    """按类别的概要表"""
    rows: List[CohortSummary]

    def row(self, class_label: str) -> CohortSummary:
        for row in self.rows:
            if row.class_label == class_label:
                return row
        raise KeyError(class_label)

    @property
    def total_documents(self) -> int:
        return sum(row.documents for row in self.rows)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([asdict(row) for row in self.rows])


def summarize(corpus: Corpus, class_labels: Optional[Sequence[str]] = None) -> SummaryTable:
    """逐类别汇总"""
    rows = []
    for label in class_labels or corpus.class_labels:
        users = corpus.cohort(label)
        documents = sum(len(user) for user in users)
        if not users or not documents:
            logger.warning("empty_cohort", class_label=label)
            rows.append(CohortSummary(label, len(users), documents, 0.0, 0.0, 0.0, 0, True))
            continue

        words = 0
        empty = 0
        for user in users:
            for doc in user.documents:
                words += whitespace_token_count(doc.text)
                if not doc.text:
                    empty += 1

        rows.append(CohortSummary(
            class_label=label,
            users=len(users),
            documents=documents,
            docs_per_user=documents / len(users),
            words_per_document=words / documents,
            activity_days=sum(user.activity_days for user in users) / len(users),
            empty_documents=empty,
        ))
    return SummaryTable(rows)
