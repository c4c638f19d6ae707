"""
psycholex 分词与互动标记模块
"""

from .tokenizer import (
    Token,
    TokenKind,
    TokenStream,
    Tokenizer,
    configure_tokenizer,
    get_tokenizer,
    load_emoticons,
    tokenize,
    whitespace_token_count,
)
from .markers import ENGAGEMENT_MARKERS, DocumentScan, MarkerProfile, scan_markers, scan_text

__all__ = [
    "Token", "TokenKind", "TokenStream", "Tokenizer",
    "configure_tokenizer", "get_tokenizer", "load_emoticons", "tokenize",
    "whitespace_token_count",
    "ENGAGEMENT_MARKERS", "DocumentScan", "MarkerProfile", "scan_markers", "scan_text",
]
