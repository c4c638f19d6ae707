"""
psycholex 语料模块：数据模型、读取/导出、概要统计、抽样
"""

from .models import Corpus, Document, IngestStats, Platform, SubmissionType, UserProfile
from .ingest import SchemaOptions, corpus_digest, export_jsonl, ingest, parse_timestamp
from .summary import CohortSummary, SummaryTable, summarize
from .sampling import sample_users, split_cohort
from .synthetic import SyntheticConfig, SyntheticCorpusGenerator, generate_synthetic, write_synthetic

__all__ = [
    "Corpus", "Document", "IngestStats", "Platform", "SubmissionType", "UserProfile",
    "SchemaOptions", "corpus_digest", "export_jsonl", "ingest", "parse_timestamp",
    "CohortSummary", "SummaryTable", "summarize",
    "sample_users", "split_cohort",
    "SyntheticConfig", "SyntheticCorpusGenerator", "generate_synthetic", "write_synthetic",
]
