"""
语料读取与导出

输入为每行一个 JSON 对象:
{"doc_id", "user_id", "class", "timestamp", "text", "platform", "submission_type"?}
"""

import hashlib
import json
from collections import defaultdict
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import structlog

from ..common.exceptions import IngestError
from .models import Corpus, Document, IngestStats, Platform, SubmissionType, UserProfile


logger = structlog.get_logger(__name__)

EARLIEST_TIMESTAMP = datetime(1990, 1, 1, tzinfo=timezone.utc)
REQUIRED_FIELDS = ("doc_id", "user_id", "class", "timestamp", "text", "platform")


@dataclass(frozen=True)
class SchemaOptions:
    """读取选项"""
    strict: bool = True
    # 未来时间判断的参考时刻，缺省为读取时刻
    now: Optional[datetime] = None


def parse_timestamp(value: Any) -> datetime:
    """解析 ISO-8601 时间并统一为 UTC (秒级精度)"""
    if not isinstance(value, str) or not value:
        raise ValueError("timestamp must be a non-empty string")
    text = value.strip()
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    parsed = datetime.fromisoformat(text)
    # 数据集没有时区信息时按 UTC 处理
    if parsed.tzinfo is None:
        parsed = parsed.replace(tzinfo=timezone.utc)
    return parsed.astimezone(timezone.utc).replace(microsecond=0)


def parse_record(record: Any, now: datetime) -> Tuple[str, Document]:
    """校验单条记录，返回 (类别, 文档)"""
    if not isinstance(record, dict):
        raise ValueError("record must be a JSON object")
    missing = [name for name in REQUIRED_FIELDS if name not in record]
    if missing:
        raise ValueError(f"missing fields: {', '.join(missing)}")

    for name in ("doc_id", "user_id", "class", "text"):
        if not isinstance(record[name], str):
            raise ValueError(f"field '{name}' must be a string")
    if not record["doc_id"] or not record["user_id"] or not record["class"]:
        raise ValueError("doc_id, user_id and class must be non-empty")

    timestamp = parse_timestamp(record["timestamp"])
    if timestamp < EARLIEST_TIMESTAMP:
        raise ValueError(f"timestamp before 1990-01-01: {record['timestamp']}")
    if timestamp > now:
        raise ValueError(f"timestamp in the future: {record['timestamp']}")

    platform = Platform(record["platform"])
    submission_type = None
    raw_type = record.get("submission_type")
    if raw_type is not None:
        if platform != Platform.REDDIT:
            raise ValueError("submission_type is only valid for reddit")
        submission_type = SubmissionType(raw_type)

    document = Document(
        doc_id=record["doc_id"],
        user_id=record["user_id"],
        timestamp=timestamp,
        text=record["text"],
        platform=platform,
        submission_type=submission_type,
    )
    return record["class"], document


def ingest(path: Union[str, Path], schema_options: Optional[SchemaOptions] = None) -> Corpus:
    """从行分隔 JSON 文件读取语料"""
    options = schema_options or SchemaOptions()
    now = options.now or datetime.now(timezone.utc)
    source = Path(path)
    if not source.is_file():
        raise IngestError(f"Input file not found: {source}", details={"path": str(source)})

    user_class: Dict[str, str] = {}
    user_docs: Dict[str, List[Document]] = defaultdict(list)
    doc_ids: Dict[str, set] = defaultdict(set)
    platforms = set()
    records = skipped = empty_texts = 0

    with open(source, "rb") as f:
        for line_no, raw in enumerate(f, start=1):
            if not raw.strip():
                continue
            try:
                class_label, document = parse_record(json.loads(raw.decode("utf-8")), now)
            except (ValueError, IngestError) as e:
                # JSONDecodeError 与 UnicodeDecodeError 都是 ValueError 的子类
                reason = e.message if isinstance(e, IngestError) else str(e)
                if options.strict:
                    raise IngestError(f"Malformed record at line {line_no}: {reason}",
                                      details={"path": str(source), "line": line_no})
                skipped += 1
                logger.warning("record_skipped", line=line_no, reason=reason)
                continue

            user_id = document.user_id
            previous = user_class.setdefault(user_id, class_label)
            if previous != class_label:
                raise IngestError(f"User {user_id} assigned two class labels",
                                  details={"line": line_no, "user_id": user_id,
                                           "classes": sorted([previous, class_label])})
            if document.doc_id in doc_ids[user_id]:
                raise IngestError(f"Duplicate doc_id {document.doc_id} for user {user_id}",
                                  details={"line": line_no, "doc_id": document.doc_id})
            doc_ids[user_id].add(document.doc_id)
            user_docs[user_id].append(document)
            platforms.add(document.platform)
            records += 1
            if not document.text:
                empty_texts += 1

    if records == 0:
        raise IngestError("no records", details={"path": str(source), "skipped": skipped})

    cohorts: Dict[str, List[UserProfile]] = defaultdict(list)
    for user_id, docs in user_docs.items():
        label = user_class[user_id]
        cohorts[label].append(UserProfile.build(user_id, label, docs))

    if len(platforms) == 1:
        platform = platforms.pop()
    else:
        platform = Platform.OTHER
        logger.warning("mixed_platforms", platforms=sorted(p.value for p in platforms))

    corpus = Corpus(
        cohorts={label: tuple(users) for label, users in cohorts.items()},
        platform=platform,
        stats=IngestStats(records=records, skipped=skipped, empty_texts=empty_texts),
    )
    logger.info("corpus_ingested", path=str(source), records=records, skipped=skipped,
                empty_texts=empty_texts, users=corpus.user_count, cohorts=corpus.class_labels)
    return corpus


def export_jsonl(corpus: Corpus, path: Union[str, Path]) -> int:
    """按输入格式导出语料，返回写入记录数"""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with open(target, "w", encoding="utf-8") as f:
        for label in sorted(corpus.class_labels):
            for user in corpus.cohort(label):
                for doc in user.documents:
                    f.write(json.dumps(doc.to_record(label), ensure_ascii=False, sort_keys=True))
                    f.write("\n")
                    count += 1
    logger.info("corpus_exported", path=str(target), records=count)
    return count


def corpus_digest(path: Union[str, Path]) -> str:
    """输入文件的 sha256 摘要"""
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()
