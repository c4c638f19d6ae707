"""
语料数据模型
"""

from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from functools import cached_property
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from ..common.exceptions import IngestError, UnknownClassError


class Platform(str, Enum):
    """社交媒体平台"""
    REDDIT = "reddit"
    TWITTER = "twitter"
    OTHER = "other"


class SubmissionType(str, Enum):
    """Reddit 提交类型"""
    POST = "post"
    COMMENT = "comment"


@dataclass(frozen=True)
class Document:
    """单条帖子/推文"""
    doc_id: str
    user_id: str
    timestamp: datetime
    text: str
    platform: Platform
    submission_type: Optional[SubmissionType] = None

    def __post_init__(self) -> None:
        if self.text is None:
            raise IngestError("Document text must not be absent", details={"doc_id": self.doc_id})
        if self.timestamp.tzinfo is None or self.timestamp.utcoffset() != timezone.utc.utcoffset(None):
            raise IngestError("Document timestamp must be UTC", details={"doc_id": self.doc_id})
        if self.submission_type is not None and self.platform != Platform.REDDIT:
            raise IngestError("submission_type is only valid for reddit documents",
                              details={"doc_id": self.doc_id, "platform": self.platform.value})

    @property
    def epoch_seconds(self) -> int:
        return int(self.timestamp.timestamp())

    @cached_property
    def scan(self):
        """分词与标记扫描结果，首次访问时计算并缓存"""
        from ..textscan.markers import scan_text
        return scan_text(self.text, self.platform, self.submission_type)

    def to_record(self, class_label: str) -> Dict[str, str]:
        """导出为输入格式的记录"""
        record = {
            "doc_id": self.doc_id,
            "user_id": self.user_id,
            "class": class_label,
            "timestamp": self.timestamp.strftime("%Y-%m-%dT%H:%M:%SZ"),
            "text": self.text,
            "platform": self.platform.value,
        }
        if self.submission_type is not None:
            record["submission_type"] = self.submission_type.value
        return record


def document_order(doc: Document) -> Tuple[datetime, str]:
    """按时间排序，同一时间按 doc_id 字典序"""
    return doc.timestamp, doc.doc_id


@dataclass(frozen=True)
class UserProfile:
    """用户及其按时间排序的文档"""
    user_id: str
    class_label: str
    documents: Tuple[Document, ...]

    def __post_init__(self) -> None:
        for doc in self.documents:
            if doc.user_id != self.user_id:
                raise IngestError("Document belongs to another user",
                                  details={"doc_id": doc.doc_id, "user_id": self.user_id})
        keys = [document_order(doc) for doc in self.documents]
        if keys != sorted(keys):
            raise IngestError("Documents must be sorted chronologically",
                              details={"user_id": self.user_id})

    @classmethod
    def build(cls, user_id: str, class_label: str, documents) -> 'UserProfile':
        return cls(user_id, class_label, tuple(sorted(documents, key=document_order)))

    def __len__(self) -> int:
        return len(self.documents)

    @property
    def activity_days(self) -> float:
        """第一条到最后一条文档的天数"""
        if not self.documents:
            return 0.0
        delta = self.documents[-1].timestamp - self.documents[0].timestamp
        return delta.total_seconds() / 86400.0


@dataclass(frozen=True)
class IngestStats:
    """读取统计"""
    records: int = 0
    skipped: int = 0
    empty_texts: int = 0


@dataclass(frozen=True)
class Corpus:
    """按类别划分的用户文档集合，读取后不可变"""
    cohorts: Mapping[str, Tuple[UserProfile, ...]]
    platform: Platform
    stats: IngestStats = field(default_factory=IngestStats, compare=False)

    def __post_init__(self) -> None:
        seen: Dict[str, str] = {}
        frozen = {}
        for label in sorted(self.cohorts):
            users = tuple(sorted(self.cohorts[label], key=lambda u: u.user_id))
            for user in users:
                if user.user_id in seen:
                    raise IngestError("User assigned to two classes",
                                      details={"user_id": user.user_id,
                                               "classes": [seen[user.user_id], label]})
                seen[user.user_id] = label
            frozen[label] = users
        object.__setattr__(self, "cohorts", MappingProxyType(frozen))

    @property
    def class_labels(self) -> List[str]:
        return list(self.cohorts)

    def cohort(self, class_label: str) -> Tuple[UserProfile, ...]:
        """获取类别下的全部用户"""
        if class_label not in self.cohorts:
            raise UnknownClassError(class_label, list(self.cohorts))
        return self.cohorts[class_label]

    def require(self, *class_labels: str) -> None:
        for label in class_labels:
            self.cohort(label)

    def iter_documents(self, class_label: Optional[str] = None) -> Iterator[Document]:
        labels = [class_label] if class_label is not None else self.class_labels
        for label in labels:
            for user in self.cohort(label):
                yield from user.documents

    @property
    def user_count(self) -> int:
        return sum(len(users) for users in self.cohorts.values())

    @property
    def document_count(self) -> int:
        return sum(len(user) for users in self.cohorts.values() for user in users)

    def with_cohorts(self, cohorts: Mapping[str, Tuple[UserProfile, ...]]) -> 'Corpus':
        """派生新语料 (例如对照组对半切分)"""
        return Corpus(cohorts=dict(cohorts), platform=self.platform, stats=self.stats)
