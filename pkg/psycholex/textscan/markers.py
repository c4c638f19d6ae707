"""
互动标记扫描

每篇文档统计: 提及、话题标签、全大写词、ASCII 表情、emoji、
*强调*、遮蔽词、连续重复词、转推 (仅 Twitter)、评论类型 (仅 Reddit)，
以及话题标签/提及占非标点 token 的比例。
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from .tokenizer import TokenKind, TokenStream, is_censored, is_emphasis, normalize_word, tokenize


# 箱线图与检验使用的标记顺序
ENGAGEMENT_MARKERS: Tuple[str, ...] = (
    "mentions",
    "hashtags",
    "all_caps",
    "ascii_emoticons",
    "emojis",
    "emphasis",
    "censored",
    "repeated_words",
    "retweet",
    "submission_is_comment",
)

PLATFORM_ONLY_MARKERS = {
    "retweet": "twitter",
    "submission_is_comment": "reddit",
}


@dataclass(frozen=True)
class MarkerProfile:
    """单篇文档的标记计数"""
    mentions: int = 0
    hashtags: int = 0
    all_caps: int = 0
    ascii_emoticons: int = 0
    emojis: int = 0
    emphasis: int = 0
    censored: int = 0
    repeated_words: int = 0
    retweet: bool = False
    submission_is_comment: bool = False
    hashtag_ratio: float = 0.0
    mention_ratio: float = 0.0
    content_tokens: int = 0

    def present(self, marker: str) -> bool:
        """该标记是否至少出现一次"""
        return bool(getattr(self, marker))


@dataclass(frozen=True)
class DocumentScan:
    """缓存在文档上的扫描结果"""
    words: Tuple[str, ...]
    markers: MarkerProfile


def _is_all_caps(surface: str) -> bool:
    # 单字母 ("I", "A") 不算
    return len(surface) >= 2 and surface.isalpha() and surface.isupper()


def profile_tokens(stream: TokenStream, platform: str, submission_type: Optional[str] = None) -> MarkerProfile:
    """由 token 流计算标记"""
    counts = dict.fromkeys(("mentions", "hashtags", "all_caps", "ascii_emoticons",
                            "emojis", "emphasis", "censored", "repeated_words"), 0)
    content_tokens = 0
    previous_word = None
    in_run = False

    for token in stream.tokens:
        kind = token.kind
        if kind != TokenKind.PUNCTUATION:
            content_tokens += 1
        if kind == TokenKind.MENTION:
            counts["mentions"] += 1
        elif kind == TokenKind.HASHTAG:
            counts["hashtags"] += 1
        elif kind == TokenKind.ASCII_EMOTICON:
            counts["ascii_emoticons"] += 1
        elif kind == TokenKind.EMOJI:
            counts["emojis"] += 1
        elif kind == TokenKind.WORD:
            surface = token.surface
            if _is_all_caps(surface):
                counts["all_caps"] += 1
            if is_emphasis(surface):
                counts["emphasis"] += 1
            elif is_censored(surface):
                counts["censored"] += 1

        # 连续重复词：每段长度 >= 2 的连续相同词记一次
        if kind == TokenKind.WORD:
            word = normalize_word(token.surface)
            if word == previous_word:
                if not in_run:
                    counts["repeated_words"] += 1
                    in_run = True
            else:
                in_run = False
            previous_word = word
        else:
            previous_word = None
            in_run = False

    retweet = (platform == "twitter" and bool(stream.tokens)
               and stream.tokens[0].surface == "RT")
    is_comment = platform == "reddit" and submission_type == "comment"

    if content_tokens:
        hashtag_ratio = counts["hashtags"] / content_tokens
        mention_ratio = counts["mentions"] / content_tokens
    else:
        hashtag_ratio = mention_ratio = 0.0

    return MarkerProfile(
        retweet=retweet,
        submission_is_comment=is_comment,
        hashtag_ratio=hashtag_ratio,
        mention_ratio=mention_ratio,
        content_tokens=content_tokens,
        **counts,
    )


def scan_text(text: str, platform: str, submission_type: Optional[str] = None) -> DocumentScan:
    """分词并扫描标记"""
    stream = tokenize(text)
    return DocumentScan(
        words=tuple(stream.normalized_words),
        markers=profile_tokens(stream, platform, submission_type),
    )


def scan_markers(doc) -> MarkerProfile:
    """文档的标记 (使用文档上缓存的扫描)"""
    return doc.scan.markers
