"""
psycholex 开放词表分析：词表重叠、平滑语言模型、KL 散度
"""

from .vocabulary import (
    Vocabulary,
    VocabularyComparison,
    build_vocabulary,
    distinctive_words,
    jaccard,
    union_collection,
)
from .language_model import (
    LanguageModel,
    Nearest,
    PairModels,
    RankCurves,
    ReferenceExperiment,
    ReferenceScore,
    build_language_model,
    build_pair_models,
    kl_divergence,
    rank_curves,
    reference_experiment,
    reference_lm_score,
    user_language_model,
)

__all__ = [
    "Vocabulary", "VocabularyComparison", "build_vocabulary", "distinctive_words",
    "jaccard", "union_collection",
    "LanguageModel", "Nearest", "PairModels", "RankCurves", "ReferenceExperiment",
    "ReferenceScore", "build_language_model", "build_pair_models", "kl_divergence",
    "rank_curves", "reference_experiment", "reference_lm_score", "user_language_model",
]
