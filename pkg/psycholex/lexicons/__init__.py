"""
psycholex 封闭词表模块：类别词典、情感词典与打分
"""

from .loaders import (
    EMOTIONS,
    CategoryLexicon,
    CategoryMatcher,
    EmotionLexicon,
    bundled_lexicon_path,
    load_category_lexicon,
    load_emotion_lexicon,
    merge_category_lexicons,
)
from .scoring import (
    UserCategoryProfile,
    UserEmotionStats,
    category_profiles,
    class_emotion_means,
    emotion_document_stats,
    match_category,
)

__all__ = [
    "EMOTIONS", "CategoryLexicon", "CategoryMatcher", "EmotionLexicon",
    "bundled_lexicon_path", "load_category_lexicon", "load_emotion_lexicon",
    "merge_category_lexicons",
    "UserCategoryProfile", "UserEmotionStats", "category_profiles",
    "class_emotion_means", "emotion_document_stats", "match_category",
]
