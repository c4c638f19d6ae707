"""
psycholex - 社交媒体用户群体的心理语言学语料分析

比较正例与对照用户群体的词表、平滑语言模型与 KL 散度、词典类别、
情感表达、互动标记与发帖时间间隔，并附带显著性检验与图表报告。
"""

__version__ = "1.0.0"

from .common.exceptions import (
    PsycholexError,
    IngestError,
    TextScanError,
    VocabularyError,
    LexiconError,
    StatsError,
    ReportError,
    ConfigurationError,
    UnknownClassError,
)

__all__ = [
    "__version__",
    "PsycholexError",
    "IngestError",
    "TextScanError",
    "VocabularyError",
    "LexiconError",
    "StatsError",
    "ReportError",
    "ConfigurationError",
    "UnknownClassError",
]
