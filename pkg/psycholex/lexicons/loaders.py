"""
词典加载

类别词典支持两种格式:
  * LIWC 风格 .dic：两行 % 之间为 "编号<TAB>类别名"，之后每行 "词<TAB>编号..."
  * 简单 TSV：每行 "类别<TAB>词"
词条为字面词或前缀模式 stem*。只支持单个 token 的词条。

情感词典为 NRC 三列格式："词<TAB>情感<TAB>0/1"。
"""

import hashlib
import unicodedata
from collections import OrderedDict
from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import structlog

from ..common.exceptions import LexiconError


logger = structlog.get_logger(__name__)

# Plutchik 八种情感 + 两种极性，顺序固定
EMOTIONS: Tuple[str, ...] = (
    "joy", "sadness", "anger", "fear", "disgust",
    "surprise", "trust", "anticipation", "positive", "negative",
)

MIN_STEM_LENGTH = 2

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@dataclass(frozen=True)
class CategoryMatcher:
    """编译后的类别：字面词集合 + 前缀元组"""
    literals: FrozenSet[str]
    prefixes: Tuple[str, ...]

    @classmethod
    def from_entries(cls, entries: Iterable[str]) -> 'CategoryMatcher':
        literals = set()
        prefixes = set()
        for entry in entries:
            if entry.endswith("*"):
                prefixes.add(entry[:-1])
            else:
                literals.add(entry)
        return cls(frozenset(literals), tuple(sorted(prefixes)))

    def matches_word(self, word: str) -> bool:
        return word in self.literals or (bool(self.prefixes) and word.startswith(self.prefixes))

    def matches(self, words: Iterable[str]) -> bool:
        """任一词命中即为真"""
        return any(self.matches_word(word) for word in words)


@dataclass(frozen=True)
class CategoryLexicon:
    """类别 -> 词条列表"""
    name: str
    categories: Mapping[str, Tuple[str, ...]]
    digest: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "categories", MappingProxyType(dict(self.categories)))
        matchers = {category: CategoryMatcher.from_entries(entries)
                    for category, entries in self.categories.items()}
        object.__setattr__(self, "_matchers", matchers)

    @property
    def category_names(self) -> List[str]:
        return list(self.categories)

    def matcher(self, category: str) -> CategoryMatcher:
        try:
            return self._matchers[category]
        except KeyError:
            raise LexiconError(f"Unknown category: {category}",
                               details={"lexicon": self.name, "available": self.category_names})

    def subset(self, categories: Sequence[str]) -> 'CategoryLexicon':
        """只保留指定类别"""
        missing = [c for c in categories if c not in self.categories]
        if missing:
            raise LexiconError(f"Unknown categories: {', '.join(missing)}",
                               details={"lexicon": self.name, "available": self.category_names})
        return CategoryLexicon(self.name, {c: self.categories[c] for c in categories}, self.digest)


@dataclass(frozen=True)
class EmotionLexicon:
    """词 -> 情感标签集合 (可为空)"""
    name: str
    associations: Mapping[str, FrozenSet[str]]
    digest: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "associations", MappingProxyType(dict(self.associations)))

    def emotions_of(self, word: str) -> FrozenSet[str]:
        return self.associations.get(word, frozenset())

    def __len__(self) -> int:
        return len(self.associations)


def _normalize_entry(entry: str) -> str:
    return unicodedata.normalize("NFC", entry.strip()).lower()


def _read_text(path: Union[str, Path]) -> Tuple[str, str]:
    try:
        raw = Path(path).read_bytes()
    except OSError as e:
        raise LexiconError(f"Failed to read lexicon: {e}", details={"path": str(path)})
    try:
        text = raw.decode("utf-8-sig")
    except UnicodeDecodeError:
        # 旧版 LIWC 词典常见 latin-1 编码
        text = raw.decode("latin-1")
    return text, hashlib.sha256(raw).hexdigest()


def _validated_categories(raw: "OrderedDict[str, List[str]]", source: str) -> Dict[str, Tuple[str, ...]]:
    categories: Dict[str, Tuple[str, ...]] = {}
    for category, entries in raw.items():
        unique: List[str] = []
        seen = set()
        for entry in entries:
            if not entry:
                continue
            if entry.endswith("*") and len(entry) - 1 < MIN_STEM_LENGTH:
                raise LexiconError(f"Prefix stem too short in category '{category}': {entry}",
                                   details={"path": source, "entry": entry})
            if "*" in entry[:-1]:
                raise LexiconError(f"Wildcard only allowed at the end of an entry: {entry}",
                                   details={"path": source, "category": category})
            if entry in seen:
                logger.warning("duplicate_lexicon_entry", path=source, category=category, entry=entry)
                continue
            seen.add(entry)
            unique.append(entry)
        if not unique:
            raise LexiconError(f"Empty category: {category}", details={"path": source})
        categories[category] = tuple(unique)
    if not categories:
        raise LexiconError("Lexicon defines no categories", details={"path": source})
    return categories


def _parse_dic(text: str, source: str) -> "OrderedDict[str, List[str]]":
    lines = text.splitlines()
    markers = [i for i, line in enumerate(lines) if line.strip() == "%"]
    if len(markers) < 2:
        raise LexiconError("Unknown lexicon format: missing % header", details={"path": source})
    start, end = markers[0], markers[1]

    ids: Dict[str, str] = {}
    raw: "OrderedDict[str, List[str]]" = OrderedDict()
    for line in lines[start + 1:end]:
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) < 2:
            raise LexiconError(f"Malformed category header line: {line!r}", details={"path": source})
        category_id, name = parts[0], parts[1]
        if name in raw:
            raise LexiconError(f"Duplicate category name: {name}", details={"path": source})
        ids[category_id] = name
        raw[name] = []

    skipped = 0
    for line in lines[end + 1:]:
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) < 2:
            parts = line.split()
        word = _normalize_entry(parts[0])
        # 多词词条 (LIWC 少量存在) 不支持
        if " " in word:
            skipped += 1
            continue
        for category_id in parts[1:]:
            category_id = category_id.strip()
            if not category_id:
                continue
            name = ids.get(category_id)
            if name is None:
                # 例如 LIWC2015 的 "(02 134)125/464" 条件编码
                skipped += 1
                continue
            raw[name].append(word)
    if skipped:
        logger.warning("lexicon_entries_skipped", path=source, skipped=skipped)
    return raw


def _parse_tsv(text: str, source: str) -> "OrderedDict[str, List[str]]":
    raw: "OrderedDict[str, List[str]]" = OrderedDict()
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconError(f"Unknown lexicon format at line {line_no}: expected 'category<TAB>word'",
                               details={"path": source, "line": line_no})
        category = parts[0].strip()
        if not category:
            raise LexiconError(f"Missing category name at line {line_no}", details={"path": source})
        raw.setdefault(category, []).append(_normalize_entry(parts[1]))
    return raw


def load_category_lexicon(path: Union[str, Path], name: Optional[str] = None) -> CategoryLexicon:
    """加载类别词典 (.dic 或 TSV)"""
    source = str(path)
    text, digest = _read_text(path)
    first = next((line.strip() for line in text.splitlines() if line.strip()), "")
    if source.endswith(".dic") or first == "%":
        raw = _parse_dic(text, source)
    else:
        raw = _parse_tsv(text, source)
    lexicon = CategoryLexicon(name or Path(path).stem, _validated_categories(raw, source), digest)
    logger.info("category_lexicon_loaded", path=source, categories=len(lexicon.categories),
                entries=sum(len(v) for v in lexicon.categories.values()))
    return lexicon


def load_emotion_lexicon(path: Union[str, Path], name: Optional[str] = None) -> EmotionLexicon:
    """加载 NRC 风格情感词典"""
    source = str(path)
    text, digest = _read_text(path)
    associations: Dict[str, set] = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            parts = line.split()
        if len(parts) != 3:
            raise LexiconError(f"Unknown emotion lexicon format at line {line_no}",
                               details={"path": source, "line": line_no})
        word, label, flag = _normalize_entry(parts[0]), parts[1].strip().lower(), parts[2].strip()
        if label not in EMOTIONS:
            raise LexiconError(f"Unknown emotion label '{label}' at line {line_no}",
                               details={"path": source, "allowed": list(EMOTIONS)})
        if flag not in ("0", "1"):
            raise LexiconError(f"Association flag must be 0 or 1 at line {line_no}",
                               details={"path": source, "value": flag})
        labels = associations.setdefault(word, set())
        if flag == "1":
            labels.add(label)
    if not associations:
        raise LexiconError("Emotion lexicon is empty", details={"path": source})
    lexicon = EmotionLexicon(name or Path(path).stem,
                             {word: frozenset(labels) for word, labels in sorted(associations.items())},
                             digest)
    logger.info("emotion_lexicon_loaded", path=source, words=len(lexicon))
    return lexicon


def bundled_lexicon_path(filename: str) -> Path:
    """随包发布的演示词典路径"""
    return DATA_DIR / "lexicons" / filename


def merge_category_lexicons(lexicons: Sequence[CategoryLexicon], name: str = "merged") -> CategoryLexicon:
    """合并多个类别词典，类别名不得重复"""
    if not lexicons:
        raise LexiconError("No category lexicons to merge")
    if len(lexicons) == 1:
        return lexicons[0]
    categories: Dict[str, Tuple[str, ...]] = {}
    owners: Dict[str, str] = {}
    for lexicon in lexicons:
        for category, entries in lexicon.categories.items():
            if category in categories:
                raise LexiconError(f"Category '{category}' defined by two lexicons",
                                   details={"lexicons": [owners[category], lexicon.name]})
            categories[category] = entries
            owners[category] = lexicon.name
    digest = ",".join(lexicon.digest for lexicon in lexicons)
    return CategoryLexicon(name, categories, digest)
