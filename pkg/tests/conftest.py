"""
测试公共夹具
"""

import json
import sys
from datetime import datetime, timedelta, timezone
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import pytest

# 添加项目路径
sys.path.insert(0, str(Path(__file__).parent.parent))

from psycholex.corpus import Corpus, Document, Platform, SubmissionType, UserProfile
from psycholex.lexicons import bundled_lexicon_path


T0 = datetime(2019, 1, 1, tzinfo=timezone.utc)
SAMPLE_CORPUS = Path(__file__).resolve().parent.parent / "psycholex" / "data" / "sample_corpus.jsonl"


def build_user(user_id: str, label: str, texts: Sequence[str],
               platform: Platform = Platform.TWITTER,
               offsets: Optional[Sequence[float]] = None,
               submission_types: Optional[Sequence[str]] = None) -> UserProfile:
    """offsets 为相对 T0 的秒数，缺省每小时一篇"""
    offsets = offsets if offsets is not None else [3600.0 * i for i in range(len(texts))]
    documents = []
    for i, (text, offset) in enumerate(zip(texts, offsets)):
        submission = None
        if submission_types is not None:
            submission = SubmissionType(submission_types[i])
        documents.append(Document(
            doc_id=f"{user_id}-{i:03d}",
            user_id=user_id,
            timestamp=T0 + timedelta(seconds=offset),
            text=text,
            platform=platform,
            submission_type=submission,
        ))
    return UserProfile.build(user_id, label, documents)


def build_corpus(cohorts: Dict[str, Dict[str, Sequence[str]]],
                 platform: Platform = Platform.TWITTER) -> Corpus:
    """{类别: {用户: [文本...]}} -> Corpus"""
    return Corpus(
        cohorts={
            label: tuple(build_user(user_id, label, texts, platform) for user_id, texts in users.items())
            for label, users in cohorts.items()
        },
        platform=platform,
    )


def write_jsonl(path: Path, records: List[dict]) -> Path:
    with open(path, "w", encoding="utf-8") as f:
        for record in records:
            f.write(record if isinstance(record, str) else json.dumps(record))
            f.write("\n")
    return path


def record(doc_id: str, user_id: str, label: str, timestamp: str = "2019-01-01T00:00:00Z",
           text: str = "hello world", platform: str = "twitter", **extra) -> dict:
    data = {"doc_id": doc_id, "user_id": user_id, "class": label, "timestamp": timestamp,
            "text": text, "platform": platform}
    data.update(extra)
    return data


@pytest.fixture
def sample_corpus_path() -> Path:
    return SAMPLE_CORPUS


@pytest.fixture
def toy_corpus() -> Corpus:
    """两类各三个用户的小语料"""
    return build_corpus({
        "depression": {
            "d1": ["i feel sad", "my head hurts #pain", "i am so tired"],
            "d2": ["me and my thoughts", "nothing helps", "i cry :("],
            "d3": ["i never sleep", "sad again", "@doc i need help"],
        },
        "control": {
            "c1": ["we won the game #win", "great day", "happy friday"],
            "c2": ["dinner with friends", "we laugh a lot :)", "nice weather"],
            "c3": ["new recipe today", "@sam see you", "we celebrate"],
        },
    })


@pytest.fixture
def demo_lexicon_paths() -> List[Path]:
    return [bundled_lexicon_path(name)
            for name in ("demo_liwc.tsv", "depression_seed.tsv", "absolutist_seed.tsv")]


@pytest.fixture
def emotion_lexicon_path() -> Path:
    return bundled_lexicon_path("demo_emotions.tsv")
