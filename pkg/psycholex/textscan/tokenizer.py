"""
分词器

规则 (按优先级):
  url        -> scheme 前缀 (http/https/ftp)
  emoticon   -> 固定 ASCII 表情列表，优先于词切分
  emoji      -> emoji 包识别、且落在 EMOJI_BLOCKS 内的码位与 ZWJ 序列
  mention    -> @ + [A-Za-z0-9_]+
  hashtag    -> # + 字母/数字/下划线，不以数字开头
  number     -> 纯数字
  word       -> Unicode 词 (含撇号缩写、*强调*、f**k 这类遮蔽词)
  punctuation-> 其余任何非空白单字符
空白只作为分隔符，所以 token 之间只有空白，可还原原文。
"""

import re
import unicodedata
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import emoji
import structlog

from ..common.exceptions import TextScanError


logger = structlog.get_logger(__name__)


class TokenKind(str, Enum):
    """token 类型"""
    WORD = "word"
    HASHTAG = "hashtag"
    MENTION = "mention"
    URL = "url"
    EMOJI = "emoji"
    ASCII_EMOTICON = "ascii_emoticon"
    NUMBER = "number"
    PUNCTUATION = "punctuation"


@dataclass(frozen=True)
class Token:
    surface: str
    kind: TokenKind
    start: int
    end: int


_EMPHASIS_RE = re.compile(r"^\*[^\W_](?:[^\s*]*[^\W_])?\*$")
_CENSORED_RE = re.compile(r"^[^\W\d_]+\*{2,}[^\W\d_]+$")
_NON_ASCII_RE = re.compile(r"[^\x00-\x7f]")

# 计为 emoji 的 Unicode 区块；emoji 包另外识别的 ©、™、‼ 等按标点处理
EMOJI_BLOCKS: Tuple[Tuple[int, int], ...] = (
    (0x1F300, 0x1F5FF),  # Miscellaneous Symbols and Pictographs
    (0x1F600, 0x1F64F),  # Emoticons
    (0x1F680, 0x1F6FF),  # Transport and Map Symbols
    (0x1F900, 0x1F9FF),  # Supplemental Symbols and Pictographs
)


def in_emoji_blocks(char: str) -> bool:
    code = ord(char)
    return any(low <= code <= high for low, high in EMOJI_BLOCKS)


def normalize_word(surface: str) -> str:
    """NFC + 小写；强调词去掉包裹的星号"""
    if _EMPHASIS_RE.match(surface):
        surface = surface[1:-1]
    return unicodedata.normalize("NFC", surface).lower()


def is_emphasis(surface: str) -> bool:
    return bool(_EMPHASIS_RE.match(surface))


def is_censored(surface: str) -> bool:
    return bool(_CENSORED_RE.match(surface))


@dataclass(frozen=True)
class TokenStream:
    """分词结果"""
    text: str
    tokens: Tuple[Token, ...]

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def surfaces(self) -> List[str]:
        return [token.surface for token in self.tokens]

    @property
    def kinds(self) -> List[TokenKind]:
        return [token.kind for token in self.tokens]

    @property
    def normalized_words(self) -> List[str]:
        """词表用的规范化词：词 token + 去掉 #/@ 的话题与提及"""
        words = []
        for token in self.tokens:
            if token.kind == TokenKind.WORD:
                words.append(normalize_word(token.surface))
            elif token.kind in (TokenKind.HASHTAG, TokenKind.MENTION):
                words.append(normalize_word(token.surface[1:]))
        return words

    def reconstruct(self) -> str:
        """用原始分隔符拼回原文"""
        parts = []
        cursor = 0
        for token in self.tokens:
            parts.append(self.text[cursor:token.start])
            parts.append(token.surface)
            cursor = token.end
        parts.append(self.text[cursor:])
        return "".join(parts)


class Tokenizer:
    """面向社交媒体文本的确定性分词器"""

    def __init__(self, emoticons: Sequence[str]):
        patterns = sorted({e for e in emoticons if e}, key=lambda e: (-len(e), e))
        self.emoticons: Tuple[str, ...] = tuple(patterns)

        alternatives = [
            r"(?P<url>(?:https?|ftp)://[^\s<>\"']*[^\s<>\"'.,;:!?)\]])",
        ]
        if patterns:
            emoticon_re = "|".join(re.escape(p) for p in patterns)
            alternatives.append(rf"(?P<emoticon>(?<!\S)(?:{emoticon_re})(?![^\s.,!?]))")
        alternatives += [
            r"(?P<mention>(?<!\w)@[A-Za-z0-9_]+)",
            r"(?P<hashtag>(?<!\w)#[^\W\d]\w*)",
            r"(?P<number>\d+(?:[.,:]\d+)*(?!\w))",
            r"(?P<censored>[^\W\d_]+\*{2,}[^\W\d_]+)",
            r"(?P<emphasis>(?<!\*)\*[^\W_](?:[^\s*]*[^\W_])?\*(?!\*))",
            r"(?P<word>\w+(?:['’]\w+)*)",
            r"(?P<punctuation>.)",
        ]
        self._token_re = re.compile("|".join(alternatives), re.DOTALL)

    _KINDS = {
        "url": TokenKind.URL,
        "emoticon": TokenKind.ASCII_EMOTICON,
        "mention": TokenKind.MENTION,
        "hashtag": TokenKind.HASHTAG,
        "number": TokenKind.NUMBER,
        "censored": TokenKind.WORD,
        "emphasis": TokenKind.WORD,
        "word": TokenKind.WORD,
        "punctuation": TokenKind.PUNCTUATION,
    }

    @staticmethod
    def _emoji_spans(text: str) -> Dict[int, int]:
        if not _NON_ASCII_RE.search(text):
            return {}
        return {item["match_start"]: item["match_end"] for item in emoji.emoji_list(text)
                if any(in_emoji_blocks(ch) for ch in item["emoji"])}

    def tokenize(self, text: str) -> TokenStream:
        """分词，对任意 Unicode 字符串都有定义"""
        tokens: List[Token] = []
        emoji_spans = self._emoji_spans(text)
        pos = 0
        length = len(text)
        while pos < length:
            if text[pos].isspace():
                pos += 1
                continue
            end = emoji_spans.get(pos)
            if end is not None:
                tokens.append(Token(text[pos:end], TokenKind.EMOJI, pos, end))
                pos = end
                continue
            match = self._token_re.match(text, pos)
            kind = self._KINDS[match.lastgroup]
            end = match.end()
            # 词内部不能吞掉 emoji 的起点
            if kind == TokenKind.WORD and emoji_spans:
                end = min([end] + [s for s in emoji_spans if pos < s < end])
            tokens.append(Token(text[pos:end], kind, pos, end))
            pos = end
        return TokenStream(text, tuple(tokens))


def whitespace_token_count(text: str) -> int:
    """按空白切分的词数 (概要表用)"""
    return len(text.split())


def load_emoticons(path: Optional[Union[str, Path]] = None) -> List[str]:
    """读取表情列表文件，# 开头为注释"""
    try:
        if path is None:
            content = resources.files("psycholex.data").joinpath("emoticons.txt").read_text(encoding="utf-8")
        else:
            content = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise TextScanError(f"Failed to read emoticon list: {e}", details={"path": str(path)})
    return [line.strip() for line in content.splitlines()
            if line.strip() and not line.startswith("#")]


_default_tokenizer: Optional[Tokenizer] = None


def configure_tokenizer(path: Optional[Union[str, Path]] = None) -> Tokenizer:
    """安装全局分词器 (CLI 的 --emoticons 覆盖)"""
    global _default_tokenizer
    _default_tokenizer = Tokenizer(load_emoticons(path))
    if path is not None:
        logger.info("emoticons_overridden", path=str(path), patterns=len(_default_tokenizer.emoticons))
    return _default_tokenizer


def get_tokenizer() -> Tokenizer:
    if _default_tokenizer is None:
        return configure_tokenizer()
    return _default_tokenizer


def tokenize(text: str) -> TokenStream:
    """使用默认分词器分词"""
    return get_tokenizer().tokenize(text)
