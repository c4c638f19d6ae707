"""
分析流水线

读取语料 -> 开放词表 / 词典类别 / 情感 / 行为分析 -> 组装 AnalysisReport -> 写出报告目录。
相互独立的类别对与类别在线程池中计算，结果按提交顺序收集，输出与并发度无关。
"""

import math
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple, TypeVar

import psutil
import structlog

from .behavior import (
    RATIO_FEATURES,
    UserBehaviorProfile,
    behavior_features,
    behavior_profiles,
    feature_sample,
    monthly_gap_table,
)
from .common.config import Config, format_log_base
from .common.exceptions import ConfigurationError, IngestError, UnknownClassError
from .corpus import Corpus, SchemaOptions, corpus_digest, ingest, split_cohort, summarize
from .lexicons import (
    EMOTIONS,
    CategoryLexicon,
    EmotionLexicon,
    bundled_lexicon_path,
    category_profiles,
    class_emotion_means,
    emotion_document_stats,
    load_category_lexicon,
    load_emotion_lexicon,
    merge_category_lexicons,
)
from .openvocab import (
    LanguageModel,
    build_language_model,
    build_pair_models,
    build_vocabulary,
    distinctive_words,
    jaccard,
    kl_divergence,
    rank_curves,
    reference_experiment,
    union_collection,
)
from .openvocab.vocabulary import Vocabulary, count_words
from .report import (
    ARTIFACT_VERSION,
    AnalysisReport,
    ReportWriter,
    SectionKind,
    boxplot_payload,
    heatmap_payload,
    lm_payload,
    markers_from_comparisons,
    radar_payload,
    timegap_payload,
)
from .stats import (
    CORRELATION_METHODS,
    Comparison,
    box_stats,
    compare_groups,
    comparison_pairs,
    emotion_correlation_matrix,
)
from .textscan import ENGAGEMENT_MARKERS, configure_tokenizer


logger = structlog.get_logger(__name__)

ANALYSES = ("openvocab", "lexicons", "emotions", "behavior")
CORRELATION_INPUTS = ("fractions", "counts")
DEFAULT_CATEGORY_LEXICONS = ("demo_liwc.tsv", "depression_seed.tsv", "absolutist_seed.tsv")
DEFAULT_EMOTION_LEXICON = "demo_emotions.tsv"

T = TypeVar("T")
R = TypeVar("R")


def _parse_pair(item: Any, key: str) -> Tuple[str, str]:
    if isinstance(item, dict):
        first, second = ("control_a", "control_b") if key == "cohorts.control_pairs" else ("positive", "control")
        if first in item and second in item:
            return str(item[first]), str(item[second])
    elif isinstance(item, (list, tuple)) and len(item) == 2:
        return str(item[0]), str(item[1])
    elif isinstance(item, str) and "," in item:
        first, second = (part.strip() for part in item.split(",", 1))
        return first, second
    raise ConfigurationError(f"Malformed cohort pair in {key}", details={"value": item})


@dataclass
class RunConfig:
    """一次运行的完整参数"""
    input_path: Optional[str]
    cohort_pairs: List[Tuple[str, str]] = field(default_factory=list)
    control_pairs: List[Tuple[str, str]] = field(default_factory=list)
    classes: List[str] = field(default_factory=list)
    category_lexicons: List[str] = field(default_factory=list)
    category_filter: List[str] = field(default_factory=list)
    emotion_lexicon: Optional[str] = None
    emoticons: Optional[str] = None
    smoothing: float = 0.1
    log_base: float = math.e
    alpha: float = 0.001
    seed: int = 42
    sample_fraction: float = 0.1
    selected: Tuple[str, ...] = ANALYSES
    output_dir: str = "out"
    strict: bool = True
    correlation_method: str = "pearson"
    correlation_input: str = "fractions"
    lm_plot_points: int = 500
    distinctive_top_n: int = 20
    max_workers: int = 4

    @classmethod
    def from_config(cls, config: Config) -> 'RunConfig':
        return cls(
            input_path=config.input_path,
            cohort_pairs=[_parse_pair(p, "cohorts.pairs") for p in config.cohort_pairs],
            control_pairs=[_parse_pair(p, "cohorts.control_pairs")
                           for p in config.get("cohorts.control_pairs") or []],
            category_lexicons=list(config.get("lexicons.categories") or []),
            category_filter=list(config.get("lexicons.category_filter") or []),
            emotion_lexicon=config.get("lexicons.emotions"),
            emoticons=config.get("lexicons.emoticons"),
            smoothing=config.smoothing_lambda,
            log_base=config.log_base,
            alpha=config.alpha,
            seed=config.seed,
            sample_fraction=float(config.get("analysis.sample_fraction", 0.1)),
            selected=tuple(config.get("analysis.selected") or ANALYSES),
            output_dir=config.output_dir,
            strict=config.strict,
            correlation_method=str(config.get("analysis.correlation.method", "pearson")),
            correlation_input=str(config.get("analysis.correlation.input", "fractions")),
            lm_plot_points=int(config.get("analysis.lm_plot_points", 500)),
            distinctive_top_n=int(config.get("analysis.distinctive_words", 20)),
            max_workers=config.max_workers,
        )

    @property
    def all_classes(self) -> List[str]:
        """按出现顺序去重的全部类别"""
        ordered: List[str] = []
        for label in [c for pair in self.cohort_pairs for c in pair] + \
                [c for pair in self.control_pairs for c in pair] + list(self.classes):
            if label not in ordered:
                ordered.append(label)
        return ordered

    def validate(self) -> None:
        if not 0.0 < self.smoothing < 1.0:
            raise ConfigurationError("Smoothing lambda must be in (0, 1)", details={"lambda": self.smoothing})
        if not 0.0 < self.alpha < 1.0:
            raise ConfigurationError("Alpha must be in (0, 1)", details={"alpha": self.alpha})
        if self.log_base not in (2.0, math.e):
            raise ConfigurationError("Log base must be 2 or e", details={"log_base": self.log_base})
        if not 0.0 < self.sample_fraction <= 1.0:
            raise ConfigurationError("Sample fraction must be in (0, 1]",
                                     details={"sample_fraction": self.sample_fraction})
        unknown = [a for a in self.selected if a not in ANALYSES]
        if unknown:
            raise ConfigurationError(f"Unknown analyses: {', '.join(unknown)}",
                                     details={"available": list(ANALYSES)})
        if self.correlation_method not in CORRELATION_METHODS:
            raise ConfigurationError(f"Unknown correlation method: {self.correlation_method}",
                                     details={"available": list(CORRELATION_METHODS)})
        if self.correlation_input not in CORRELATION_INPUTS:
            raise ConfigurationError(f"Unknown correlation input: {self.correlation_input}",
                                     details={"available": list(CORRELATION_INPUTS)})
        if self.max_workers < 1:
            raise ConfigurationError("max_workers must be at least 1")
        if not self.all_classes:
            raise ConfigurationError("No cohorts configured", details={"key": "cohorts.pairs"})
        for positive, control in self.cohort_pairs:
            if positive == control:
                raise ConfigurationError("A cohort cannot be compared with itself",
                                         details={"class_label": positive})

    def validate_classes(self, corpus: Corpus) -> None:
        """每个引用到的类别都必须存在于语料中"""
        available = corpus.class_labels
        for label in self.all_classes:
            if label not in available:
                raise UnknownClassError(label, available)

    def metadata(self) -> Dict[str, Any]:
        return {
            "lambda": self.smoothing,
            "log_base": format_log_base(self.log_base),
            "alpha": self.alpha,
            "seed": self.seed,
            "sample_fraction": self.sample_fraction,
            "selected": list(self.selected),
            "cohort_pairs": [list(p) for p in self.cohort_pairs],
            "control_pairs": [list(p) for p in self.control_pairs],
            "correlation": {"method": self.correlation_method, "input": self.correlation_input},
        }


@dataclass
class PipelineResult:
    report: AnalysisReport
    models: Dict[str, LanguageModel]
    corpus: Corpus
    peak_rss_bytes: int = 0


def _pair_name(base: str, pair: Tuple[str, str], many: bool) -> str:
    return f"{base}_{pair[0]}_vs_{pair[1]}" if many else base


class AnalysisPipeline:
    """按 RunConfig 执行所选分析并组装报告"""

    def __init__(self, run_config: RunConfig):
        run_config.validate()
        self.config = run_config
        self._process = psutil.Process()
        # 峰值取阶段检查点与各工作任务结束时的采样最大值
        self._peak_rss = 0
        self._rss_lock = threading.Lock()
        self._tests = 0
        self._executor: Optional[ThreadPoolExecutor] = None

    # ------------------------------------------------------------ 公共入口

    def run(self, corpus: Optional[Corpus] = None) -> PipelineResult:
        cfg = self.config
        if cfg.emoticons:
            configure_tokenizer(cfg.emoticons)
        if corpus is None:
            if not cfg.input_path:
                raise ConfigurationError("No input corpus configured", details={"key": "input.path"})
            corpus = ingest(cfg.input_path, SchemaOptions(strict=cfg.strict))
        cfg.validate_classes(corpus)
        self._track_memory("ingest")

        category_lexicon = self._category_lexicon() if "lexicons" in cfg.selected else None
        emotion_lexicon = self._emotion_lexicon() if "emotions" in cfg.selected else None

        report = AnalysisReport(metadata=self._metadata(corpus, category_lexicon, emotion_lexicon))
        models: Dict[str, LanguageModel] = {}
        self._tests = 0

        summary = summarize(corpus, cfg.all_classes)
        report.add_table("corpus_summary", [asdict(row) for row in summary.rows],
                         title="Corpus summary per cohort")

        with ThreadPoolExecutor(max_workers=cfg.max_workers, thread_name_prefix="psycholex") as executor:
            self._executor = executor
            if "openvocab" in cfg.selected and cfg.cohort_pairs:
                models.update(self._openvocab(corpus, report))
                self._track_memory("openvocab")
            if category_lexicon is not None:
                self._lexicons(corpus, report, category_lexicon)
                self._track_memory("lexicons")
            if emotion_lexicon is not None:
                self._emotions(corpus, report, emotion_lexicon)
                self._track_memory("emotions")
            if "behavior" in cfg.selected:
                self._behavior(corpus, report)
                self._track_memory("behavior")

        report.metadata["tests_performed"] = self._tests
        report.metadata["multiple_comparison_correction"] = None
        logger.info("pipeline_finished", sections=len(report.sections), tests=self._tests,
                    peak_rss_mb=round(self._peak_rss / 2 ** 20, 1))
        return PipelineResult(report, models, corpus, self._peak_rss)

    def run_and_write(self, corpus: Optional[Corpus] = None) -> PipelineResult:
        result = self.run(corpus)
        run_info = {"peak_rss_bytes": result.peak_rss_bytes}
        ReportWriter(self.config.output_dir).write(result.report, result.models, run_info)
        return result

    # ------------------------------------------------------------ 工具

    def _map(self, fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
        """线程池映射，结果保持提交顺序；每个任务结束时采样一次内存"""
        def task(item: T) -> R:
            result = fn(item)
            self._sample_rss()
            return result

        return list(self._executor.map(task, items))

    def _sample_rss(self) -> int:
        rss = self._process.memory_info().rss
        with self._rss_lock:
            self._peak_rss = max(self._peak_rss, rss)
        return rss

    def _track_memory(self, stage: str) -> None:
        rss = self._sample_rss()
        logger.debug("memory_checkpoint", stage=stage, rss_mb=round(rss / 2 ** 20, 1))

    def _category_lexicon(self) -> CategoryLexicon:
        paths = self.config.category_lexicons or [str(bundled_lexicon_path(f))
                                                  for f in DEFAULT_CATEGORY_LEXICONS]
        lexicon = merge_category_lexicons([load_category_lexicon(p) for p in paths])
        if self.config.category_filter:
            lexicon = lexicon.subset(self.config.category_filter)
        return lexicon

    def _emotion_lexicon(self) -> EmotionLexicon:
        path = self.config.emotion_lexicon or str(bundled_lexicon_path(DEFAULT_EMOTION_LEXICON))
        return load_emotion_lexicon(path)

    def _metadata(self, corpus: Corpus, categories: Optional[CategoryLexicon],
                  emotions: Optional[EmotionLexicon]) -> Dict[str, Any]:
        cfg = self.config
        lexicons: Dict[str, Any] = {}
        if categories is not None:
            lexicons["categories"] = {"name": categories.name, "digest": categories.digest,
                                      "categories": categories.category_names}
        if emotions is not None:
            lexicons["emotions"] = {"name": emotions.name, "digest": emotions.digest}
        stats = corpus.stats
        digest = None
        if cfg.input_path and Path(cfg.input_path).is_file():
            digest = corpus_digest(cfg.input_path)
        return {
            "artifact_version": ARTIFACT_VERSION,
            "corpus_digest": digest,
            "platform": corpus.platform.value,
            "config": cfg.metadata(),
            "lexicons": lexicons,
            "ingest": {
                "records": stats.records or corpus.document_count,
                "skipped": stats.skipped,
                "empty_texts": stats.empty_texts,
            },
            "conventions": {
                "gap_month": "gap assigned to the UTC month of the earlier document; months pooled across years",
                "gap_std": "population standard deviation for bands; Welch tests use sample variance",
                "gap_unit": "seconds internally, hours in tables and charts",
                "vocabulary": "sigil-stripped hashtags and mentions are vocabulary words",
                "quartiles": "linear interpolation (type 7), whiskers at 1.5 IQR",
                "collection": "union of the two compared classes; lm_plot_all uses the union of all classes",
                "control_reference": "explicit control pairs, else seeded halves of the control cohort",
            },
        }

    def _pairs(self) -> List[Tuple[str, str, Any]]:
        return comparison_pairs(self.config.cohort_pairs)

    def _add_comparisons(self, report: AnalysisReport, name: str, comparisons: List[Comparison],
                         title: str) -> None:
        self._tests += sum(1 for c in comparisons if c.result is not None)
        report.add_table(name, [c.to_row() for c in comparisons], title=title)

    # ------------------------------------------------------------ 开放词表

    def _control_reference(self, corpus: Corpus, positive: str, control: str,
                           index: int) -> Tuple[Optional[float], str]:
        """KL(ControlA‖ControlB)：配置的对照对，否则对照组对半切分"""
        cfg = self.config
        for first, second in cfg.control_pairs:
            if control in (first, second):
                models = build_pair_models(build_vocabulary(corpus, first),
                                           build_vocabulary(corpus, second), cfg.smoothing)
                return (kl_divergence(models.positive_model, models.control_model, cfg.log_base),
                        f"{first}|{second}")
        try:
            half_a, half_b = split_cohort(corpus, control, cfg.seed + index)
        except IngestError as exc:
            logger.warning("control_reference_unavailable", control=control, reason=exc.message)
            return None, "unavailable"
        vocab_a = Vocabulary(f"{control}_a", count_words(half_a))
        vocab_b = Vocabulary(f"{control}_b", count_words(half_b))
        if not vocab_a.total_tokens or not vocab_b.total_tokens:
            return None, "unavailable"
        models = build_pair_models(vocab_a, vocab_b, cfg.smoothing)
        return kl_divergence(models.positive_model, models.control_model, cfg.log_base), f"{control} halves"

    def _openvocab_pair(self, corpus: Corpus, index: int, pair: Tuple[str, str]) -> Dict[str, Any]:
        cfg = self.config
        positive, control = pair
        vocab_p = build_vocabulary(corpus, positive)
        vocab_c = build_vocabulary(corpus, control)
        comparison = jaccard(vocab_p, vocab_c)
        row: Dict[str, Any] = {
            "positive": positive,
            "control": control,
            "positive_vocabulary": comparison.positive_size,
            "control_vocabulary": comparison.control_size,
            "intersection": comparison.intersection,
            "union": comparison.union,
            "jaccard": comparison.jaccard,
            "only_positive": comparison.only_positive,
            "only_control": comparison.only_control,
            "kl_positive_control": None,
            "kl_control_positive": None,
            "kl_control_control": None,
            "control_reference": None,
            "log_base": format_log_base(cfg.log_base),
        }
        result: Dict[str, Any] = {"pair": pair, "row": row, "models": None, "reference": None,
                                  "distinctive": distinctive_words(vocab_p, vocab_c, cfg.distinctive_top_n),
                                  "curves": None}
        if not vocab_p.total_tokens or not vocab_c.total_tokens:
            logger.warning("empty_vocabulary", positive=positive, control=control)
            return result

        models = build_pair_models(vocab_p, vocab_c, cfg.smoothing)
        row["kl_positive_control"] = kl_divergence(models.positive_model, models.control_model, cfg.log_base)
        row["kl_control_positive"] = kl_divergence(models.control_model, models.positive_model, cfg.log_base)
        row["kl_control_control"], row["control_reference"] = self._control_reference(
            corpus, positive, control, index)
        result["models"] = models
        result["curves"] = rank_curves([models.positive_model, models.control_model], cfg.lm_plot_points)
        result["reference"] = reference_experiment(
            corpus, positive, control, fraction=cfg.sample_fraction, smoothing=cfg.smoothing,
            seed=cfg.seed + 1000 * (index + 1), log_base=cfg.log_base, models=models)
        return result

    def _openvocab(self, corpus: Corpus, report: AnalysisReport) -> Dict[str, LanguageModel]:
        cfg = self.config
        pairs = cfg.cohort_pairs
        many = len(pairs) > 1
        results = self._map(lambda item: self._openvocab_pair(corpus, *item), list(enumerate(pairs)))

        report.add_table("vocab_comparison", [r["row"] for r in results],
                         title="Vocabulary overlap and divergence")
        distinctive_rows = [
            {"positive": r["pair"][0], "control": r["pair"][1], "rank": rank, "word": word, "count": count}
            for r in results for rank, (word, count) in enumerate(r["distinctive"], start=1)
        ]
        report.add_table("distinctive_words", distinctive_rows,
                         columns=["positive", "control", "rank", "word", "count"],
                         title="Most frequent words used only by the positive class")

        reference_rows = []
        models: Dict[str, LanguageModel] = {}
        for r in results:
            positive, control = r["pair"]
            experiment = r["reference"]
            if experiment is not None:
                for label, means in experiment.class_means().items():
                    reference_rows.append({"positive": positive, "control": control, "class_label": label,
                                           **means})
            if r["models"] is not None:
                for model in (r["models"].positive_model, r["models"].control_model):
                    models[_pair_name(f"lm_{model.class_label}", r["pair"], many)] = model
                report.add_chart(SectionKind.LMPLOT, _pair_name("lm_plot", r["pair"], many),
                                 lm_payload(r["curves"]),
                                 title=f"Language models: {positive} vs {control}")
        report.add_table("reference_lm", reference_rows,
                         columns=["positive", "control", "class_label", "kl_to_positive",
                                  "kl_to_control", "nearest_positive", "users"],
                         title="Per-user divergence to the reference models (class means)")

        classes = [c for c in cfg.all_classes if c in {x for p in pairs for x in p}]
        if len(classes) > 2:
            vocabs = [build_vocabulary(corpus, label) for label in classes]
            collection = union_collection(vocabs, "all")
            nonempty = [v for v in vocabs if v.total_tokens]
            if collection.total_tokens and len(nonempty) > 1:
                all_models = [build_language_model(v, collection, cfg.smoothing) for v in nonempty]
                report.add_chart(SectionKind.LMPLOT, "lm_plot_all",
                                 lm_payload(rank_curves(all_models, cfg.lm_plot_points)),
                                 title="Language models over all classes")
        return models

    # ------------------------------------------------------------ 词典类别

    def _lexicons(self, corpus: Corpus, report: AnalysisReport, lexicon: CategoryLexicon) -> None:
        cfg = self.config
        classes = cfg.all_classes
        profiles = self._map(lambda label: category_profiles(corpus, label, lexicon), classes)
        categories = lexicon.category_names
        samples = {
            label: {c: [p.proportions[c] for p in per_class] for c in categories}
            for label, per_class in zip(classes, profiles)
        }
        comparisons = compare_groups(samples, categories, self._pairs(), cfg.alpha)
        self._add_comparisons(report, "category_tests", comparisons,
                              "Welch tests on per-user category proportions")
        groups = {
            c: {label: box_stats(samples[label][c]) for label in classes if samples[label][c]}
            for c in categories
        }
        groups = {c: g for c, g in groups.items() if g}
        if groups:
            report.add_chart(SectionKind.BOXPLOT, "category_boxplots",
                             boxplot_payload(groups, markers_from_comparisons(comparisons),
                                             "proportion of documents"),
                             title="Lexicon categories per class")

    # ------------------------------------------------------------ 情感

    def _emotions(self, corpus: Corpus, report: AnalysisReport, lexicon: EmotionLexicon) -> None:
        cfg = self.config
        classes = cfg.all_classes
        stats = dict(zip(classes, self._map(lambda label: emotion_document_stats(corpus, label, lexicon),
                                            classes)))
        means = {label: class_emotion_means(stats[label]) for label in classes}
        report.add_table("emotion_means",
                         [{"class_label": label, **means[label]} for label in classes],
                         columns=["class_label", *EMOTIONS],
                         title="Mean number of documents per user with each emotion")
        report.add_chart(SectionKind.RADAR, "emotion_radar", radar_payload(means, EMOTIONS),
                         title="Emotions per class")

        samples = {label: {e: [s.fractions[e] for s in stats[label]] for e in EMOTIONS} for label in classes}
        comparisons = compare_groups(samples, EMOTIONS, self._pairs(), cfg.alpha)
        self._add_comparisons(report, "emotion_tests", comparisons,
                              "Welch tests on per-user emotion document fractions")

        field_name = "fractions" if cfg.correlation_input == "fractions" else "counts"
        many = len(cfg.cohort_pairs) > 1
        for pair in cfg.cohort_pairs:
            matrices = []
            for label in pair:
                vectors = [dict(getattr(s, field_name)) for s in stats[label]]
                if len(vectors) < 2:
                    logger.warning("correlation_skipped", class_label=label, users=len(vectors))
                    break
                matrices.append(emotion_correlation_matrix(vectors, EMOTIONS, cfg.correlation_method, label))
            else:
                report.add_chart(SectionKind.HEATMAP, _pair_name("emotion_heatmap", pair, many),
                                 heatmap_payload(matrices),
                                 title=f"Emotion correlation: {pair[0]} vs {pair[1]}")

    # ------------------------------------------------------------ 行为

    def _behavior(self, corpus: Corpus, report: AnalysisReport) -> None:
        cfg = self.config
        classes = cfg.all_classes
        profiles: Dict[str, List[UserBehaviorProfile]] = dict(
            zip(classes, self._map(lambda label: behavior_profiles(corpus, label), classes)))
        platform = corpus.platform.value
        features = behavior_features(platform)

        rows = []
        for label in classes:
            for p in profiles[label]:
                row: Dict[str, Any] = {"user_id": p.user_id, "class_label": label, "documents": p.documents}
                for marker in ENGAGEMENT_MARKERS:
                    row[marker] = p.feature(marker)
                row.update(hashtag_ratio=p.hashtag_ratio, mention_ratio=p.mention_ratio,
                           mean_gap_hours=None if p.mean_gap_seconds is None else p.mean_gap_seconds / 3600.0)
                rows.append(row)
        report.add_table("behavior_profiles", rows,
                         columns=["user_id", "class_label", "documents", *ENGAGEMENT_MARKERS,
                                  *RATIO_FEATURES, "mean_gap_hours"],
                         title="Per-user engagement markers")

        samples = {label: {f: feature_sample(profiles[label], f) for f in features} for label in classes}
        comparisons = compare_groups(samples, features, self._pairs(), cfg.alpha)
        self._add_comparisons(report, "behavior_tests", comparisons,
                              "Welch tests on per-user engagement features")

        markers = [f for f in features if f in ENGAGEMENT_MARKERS]
        groups = {
            m: {label: box_stats(samples[label][m]) for label in classes if samples[label][m]}
            for m in markers
        }
        groups = {m: g for m, g in groups.items() if g}
        if groups:
            report.add_chart(SectionKind.BOXPLOT, "engagement_boxplots",
                             boxplot_payload(groups, markers_from_comparisons(comparisons),
                                             "fraction of documents"),
                             title="Engagement markers per class")

        table = monthly_gap_table(corpus, classes, mapper=self._map)
        report.add_table("monthly_gaps", table.rows(),
                         columns=["class_label", "month", "mean_gap_hours", "std_gap_hours", "gaps"],
                         title="Posting time-gap by month (hours)")
        if table.is_empty():
            logger.warning("timegap_plot_skipped", reason="no user has two documents")
        else:
            report.add_chart(SectionKind.LINEPLOT, "timegap_plot", timegap_payload(table),
                             title="Time-gap by month")


def run(config: Config) -> PipelineResult:
    """由配置执行整条流水线并写出报告"""
    return AnalysisPipeline(RunConfig.from_config(config)).run_and_write()
