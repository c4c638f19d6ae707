"""
合成语料生成

按平台生成正例与对照两类用户：
- 正例使用第一人称代词的频率是对照的两倍；
- Twitter 上正例话题标签约占 1% 的 token，对照约 2%；
- 每篇文档恰好含 happy / sad 之一，用户的 joy 概率均匀抽取，
  因此用户级 joy 与 sadness 文档比例完全负相关；
- 正例额外使用一组主题词，使其语言模型偏离对照。
文档只含字母词与话题标签，不含标点，每篇 token 数固定。
"""

import json
from dataclasses import dataclass, field
from datetime import datetime, timedelta, timezone
from pathlib import Path
from typing import Dict, Iterator, List, Tuple, Union

import numpy as np
import structlog

from ..common.exceptions import IngestError


logger = structlog.get_logger(__name__)

FIRST_PERSON = ("i", "me", "my", "myself", "im")
JOY_CUE = "happy"
SADNESS_CUE = "sad"
TOPICAL_WORDS = ("insomnia", "therapy", "diagnosis", "exhausted", "numb",
                 "zolvrin", "kexomil", "vasquen")

# 伪词音节，首字母不与随附词典中的任何词条重合
ONSETS = ("z", "x", "q", "v")
NUCLEI = ("a", "e", "o", "u", "y")
CODAS = ("", "n", "r", "l", "sk", "th")


@dataclass(frozen=True)
class SyntheticConfig:
    """生成参数"""
    platforms: Tuple[str, ...] = ("twitter", "reddit")
    positive_label: str = "depression"
    control_label: str = "control"
    users_per_class: int = 50
    documents_per_user: int = 40
    tokens_per_document: int = 20
    vocabulary_size: int = 400
    zipf_exponent: float = 1.1
    pronoun_rate: float = 0.02
    pronoun_multiplier: float = 2.0
    positive_hashtag_rate: float = 0.01
    control_hashtag_rate: float = 0.02
    topical_rate: float = 0.06
    joy_rate_range: Tuple[float, float] = (0.2, 0.8)
    mean_gap_hours: float = 72.0
    start: datetime = field(default_factory=lambda: datetime(2018, 1, 1, tzinfo=timezone.utc))
    seed: int = 42

    def validate(self) -> None:
        if self.users_per_class < 1 or self.documents_per_user < 1:
            raise IngestError("Synthetic corpus needs at least one user and one document per user")
        if self.tokens_per_document < 2:
            raise IngestError("Synthetic documents need at least two tokens")
        for name in ("pronoun_rate", "positive_hashtag_rate", "control_hashtag_rate", "topical_rate"):
            value = getattr(self, name)
            if not 0.0 <= value < 1.0:
                raise IngestError(f"Synthetic rate out of range: {name}", details={name: value})
        if self.pronoun_rate * self.pronoun_multiplier + self.topical_rate + \
                max(self.positive_hashtag_rate, self.control_hashtag_rate) >= 1.0:
            raise IngestError("Synthetic token rates sum to one or more")
        unknown = [p for p in self.platforms if p not in ("twitter", "reddit", "other")]
        if unknown:
            raise IngestError("Unknown synthetic platform", details={"platforms": unknown})


def pseudo_vocabulary(size: int, rng: np.random.Generator) -> List[str]:
    """由音节拼出 size 个互不相同的伪词"""
    words: List[str] = []
    seen = set()
    while len(words) < size:
        syllables = int(rng.integers(2, 4))
        word = "".join(
            ONSETS[rng.integers(len(ONSETS))] + NUCLEI[rng.integers(len(NUCLEI))]
            + CODAS[rng.integers(len(CODAS))]
            for _ in range(syllables)
        )
        if word not in seen:
            seen.add(word)
            words.append(word)
    return words


class SyntheticCorpusGenerator:
    """按配置生成记录 (dict)，同一配置输出完全相同"""

    def __init__(self, config: SyntheticConfig):
        config.validate()
        self.config = config
        self.rng = np.random.default_rng(config.seed)
        self.vocabulary = pseudo_vocabulary(config.vocabulary_size, self.rng)
        ranks = np.arange(1, config.vocabulary_size + 1, dtype=float)
        weights = ranks ** -config.zipf_exponent
        self.word_cdf = np.cumsum(weights / weights.sum())
        self.word_cdf[-1] = 1.0

    def _document_text(self, positive: bool, platform: str, joy_rate: float) -> str:
        cfg = self.config
        rng = self.rng
        n = cfg.tokens_per_document
        pronoun_rate = cfg.pronoun_rate * (cfg.pronoun_multiplier if positive else 1.0)
        hashtag_rate = 0.0
        if platform == "twitter":
            hashtag_rate = cfg.positive_hashtag_rate if positive else cfg.control_hashtag_rate
        topical_rate = cfg.topical_rate if positive else 0.0

        draws = rng.random(n)
        fillers = [self.vocabulary[i] for i in np.searchsorted(self.word_cdf, rng.random(n), side="right")]
        tokens: List[str] = []
        hashtag_slots = []
        for k in range(n):
            u = draws[k]
            if u < hashtag_rate:
                tokens.append("#" + fillers[k])
                hashtag_slots.append(k)
            elif u < hashtag_rate + pronoun_rate:
                tokens.append(FIRST_PERSON[rng.integers(len(FIRST_PERSON))])
            elif u < hashtag_rate + pronoun_rate + topical_rate:
                tokens.append(TOPICAL_WORDS[rng.integers(len(TOPICAL_WORDS))])
            else:
                tokens.append(str(fillers[k]))

        # 情绪词替换一个非话题标签位置
        free = [k for k in range(n) if k not in hashtag_slots] or [0]
        slot = free[int(rng.integers(len(free)))]
        tokens[slot] = JOY_CUE if rng.random() < joy_rate else SADNESS_CUE
        return " ".join(tokens)

    def _user_records(self, platform: str, label: str, positive: bool, index: int) -> Iterator[Dict]:
        cfg = self.config
        rng = self.rng
        user_id = f"{platform[:2]}-{label}-{index:05d}"
        joy_rate = float(rng.uniform(*cfg.joy_rate_range))
        offset = float(rng.uniform(0, 30 * 24 * 3600))
        gaps = rng.exponential(cfg.mean_gap_hours * 3600.0, size=cfg.documents_per_user)
        gaps[0] = 0.0
        seconds = offset + np.cumsum(gaps)
        for d in range(cfg.documents_per_user):
            timestamp = cfg.start + timedelta(seconds=int(seconds[d]))
            record = {
                "doc_id": f"{user_id}-{d:05d}",
                "user_id": user_id,
                "class": label,
                "timestamp": timestamp.strftime("%Y-%m-%dT%H:%M:%SZ"),
                "text": self._document_text(positive, platform, joy_rate),
                "platform": platform,
            }
            if platform == "reddit":
                record["submission_type"] = "comment" if rng.random() < 0.6 else "post"
            yield record

    def records(self, platform: str) -> Iterator[Dict]:
        """某个平台的全部记录"""
        cfg = self.config
        for label, positive in ((cfg.positive_label, True), (cfg.control_label, False)):
            for index in range(cfg.users_per_class):
                yield from self._user_records(platform, label, positive, index)


def generate_synthetic(config: SyntheticConfig) -> Dict[str, List[Dict]]:
    """平台 -> 记录列表"""
    generator = SyntheticCorpusGenerator(config)
    corpora = {platform: list(generator.records(platform)) for platform in config.platforms}
    logger.info("synthetic_generated", platforms=list(corpora),
                records=sum(len(r) for r in corpora.values()), seed=config.seed)
    return corpora


def write_synthetic(config: SyntheticConfig, output_dir: Union[str, Path]) -> Dict[str, Path]:
    """每个平台写一个 synthetic_<平台>.jsonl，返回路径"""
    target = Path(output_dir)
    target.mkdir(parents=True, exist_ok=True)
    generator = SyntheticCorpusGenerator(config)
    paths: Dict[str, Path] = {}
    for platform in config.platforms:
        path = target / f"synthetic_{platform}.jsonl"
        count = 0
        with open(path, "w", encoding="utf-8") as f:
            for record in generator.records(platform):
                f.write(json.dumps(record, sort_keys=True))
                f.write("\n")
                count += 1
        paths[platform] = path
        logger.info("synthetic_written", platform=platform, path=str(path), records=count)
    return paths
