"""
psycholex 命令行入口

子命令: ingest / openvocab / lexicon / emotion / behavior / report / run-all / generate
配置优先级: 内置默认 < 配置文件 < 环境变量 < 命令行参数
进度与警告写 stderr；数据写文件或 stdout。
"""

import functools
import json
import sys
from typing import Any, Callable, List, Optional, Sequence, Tuple

import click
import structlog

from . import __version__
from .common.config import Config, apply_env_overrides, init_config
from .common.exceptions import ConfigurationError, PsycholexError
from .common.logging import setup_logging


logger = structlog.get_logger(__name__)

EXIT_ERROR = 1
EXIT_CONFIG_ERROR = 2
EXIT_UNEXPECTED = 3


class PsycholexApplication:
    """psycholex 应用程序主类：配置、日志与流水线调度"""

    def __init__(self, config_file: Optional[str] = None, log_level: Optional[str] = None,
                 emoticons: Optional[str] = None):
        self.config_file = config_file
        self.log_level = log_level
        self.emoticons = emoticons
        self.config: Optional[Config] = None

    def init(self) -> Config:
        """初始化配置与日志"""
        if self.config is None:
            self.config = init_config(self.config_file)
            apply_env_overrides(self.config)
            if self.log_level:
                self.config.set('logging.level', self.log_level)
            if self.emoticons:
                self.config.set('lexicons.emoticons', self.emoticons)
            self._setup_logging()
            logger.debug("configuration_loaded", config_file=self.config.config_file or "defaults",
                         debug=self.config.debug_mode)
        return self.config

    def _setup_logging(self) -> None:
        level = "DEBUG" if self.config.debug_mode and not self.log_level else self.config.log_level
        setup_logging(level, self.config.log_format, self.config.get('logging.loggers', {}))

    def override(self, **values: Any) -> None:
        """命令行参数覆盖配置 (None 表示未给出)"""
        config = self.init()
        for key, value in values.items():
            if value is not None:
                config.set(key.replace('__', '.'), value)

    def run_config(self, selected: Sequence[str], pairs: Optional[List[Tuple[str, str]]] = None,
                   classes: Sequence[str] = ()):
        from .pipeline import RunConfig

        run_config = RunConfig.from_config(self.init())
        run_config.selected = tuple(selected)
        if pairs is not None:
            run_config.cohort_pairs = pairs
            run_config.control_pairs = []
        run_config.classes = list(classes)
        return run_config

    def execute(self, selected: Sequence[str], pairs: Optional[List[Tuple[str, str]]] = None,
                classes: Sequence[str] = ()):
        from .pipeline import AnalysisPipeline

        run_config = self.run_config(selected, pairs, classes)
        logger.info("run_started", analyses=list(selected), pairs=run_config.cohort_pairs,
                    output=run_config.output_dir, workers=run_config.max_workers)
        result = AnalysisPipeline(run_config).run_and_write()
        click.echo(json.dumps({
            "output": run_config.output_dir,
            "sections": [s.name for s in result.report.sections],
        }, sort_keys=True))
        return result


def _emit_error(payload: dict) -> None:
    click.echo(json.dumps({"error": payload}, sort_keys=True, default=str), err=True)


def handle_errors(func: Callable) -> Callable:
    """把异常转为结构化错误输出与退出码"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ConfigurationError as e:
            _emit_error(e.to_dict())
            sys.exit(EXIT_CONFIG_ERROR)
        except PsycholexError as e:
            _emit_error(e.to_dict())
            sys.exit(EXIT_ERROR)
        except click.ClickException:
            raise
        except Exception as e:
            logger.exception("unexpected_error")
            _emit_error({"code": 9999, "type": type(e).__name__, "message": str(e), "details": {}})
            sys.exit(EXIT_UNEXPECTED)
    return wrapper


def split_classes(value: Optional[str]) -> List[str]:
    if not value:
        return []
    return [part.strip() for part in value.split(',') if part.strip()]


def pairs_for_classes(config: Config, classes: Sequence[str]) -> List[Tuple[str, str]]:
    """配置中两端都在 classes 内的类别对；没有时以第一个类别为正例对其余类别"""
    from .pipeline import _parse_pair

    configured = [_parse_pair(p, "cohorts.pairs") for p in config.cohort_pairs]
    selected = [p for p in configured if p[0] in classes and p[1] in classes]
    if selected:
        return selected
    return [(classes[0], other) for other in classes[1:]]


def input_option(func: Callable) -> Callable:
    return click.option('--input', '-i', 'input_path', type=click.Path(exists=True, dir_okay=False),
                        help='Corpus file (one JSON record per line)')(func)


def out_option(func: Callable) -> Callable:
    return click.option('--out', '-o', 'out_dir', type=click.Path(file_okay=False),
                        help='Output directory')(func)


def seed_option(func: Callable) -> Callable:
    return click.option('--seed', type=int, help='Random seed')(func)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option('--config', '-c', 'config_file',
              help='Configuration file path (YAML or JSON)',
              type=click.Path(exists=True, dir_okay=False))
@click.option('--log-level', '-l',
              type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR'], case_sensitive=False),
              help='Log level')
@click.option('--emoticons', type=click.Path(exists=True, dir_okay=False),
              help='Emoticon pattern file, one pattern per line')
@click.version_option(__version__, '--version', '-v', message='psycholex version %(version)s')
@click.pass_context
def cli(ctx: click.Context, config_file: Optional[str], log_level: Optional[str],
        emoticons: Optional[str]) -> None:
    """psycholex 语料分析工具"""
    ctx.obj = PsycholexApplication(config_file, log_level, emoticons)


@cli.command()
@input_option
@click.option('--strict/--lenient', default=None, help='Fail on malformed lines (default) or skip them')
@click.option('--export', 'export_path', type=click.Path(dir_okay=False),
              help='Write the validated corpus back as JSONL')
@click.pass_obj
@handle_errors
def ingest(app: PsycholexApplication, input_path: Optional[str], strict: Optional[bool],
           export_path: Optional[str]) -> None:
    """校验语料并输出各类别概要"""
    from .corpus import SchemaOptions, export_jsonl, ingest as ingest_corpus, summarize
    from .report import clean_value

    app.override(input__path=input_path, input__strict=strict)
    config = app.config
    if not config.input_path:
        raise ConfigurationError("No input corpus given", details={"option": "--input"})
    corpus = ingest_corpus(config.input_path, SchemaOptions(strict=config.strict))
    if export_path:
        export_jsonl(corpus, export_path)
    summary = summarize(corpus)
    click.echo(json.dumps(clean_value({
        "platform": corpus.platform.value,
        "records": corpus.stats.records,
        "skipped": corpus.stats.skipped,
        "empty_texts": corpus.stats.empty_texts,
        "cohorts": summary.to_frame().to_dict(orient="records"),
    }), sort_keys=True, indent=2))


@cli.command()
@input_option
@click.option('--positive', required=True, help='Positive class label')
@click.option('--control', required=True, help='Control class label')
@click.option('--lambda', 'smoothing', type=float, help='Jelinek-Mercer smoothing weight in (0, 1)')
@click.option('--log-base', type=click.Choice(['2', 'e']), help='Logarithm base for KL divergence')
@click.option('--sample-fraction', type=float, help='Fraction of users for the reference comparison')
@seed_option
@out_option
@click.pass_obj
@handle_errors
def openvocab(app: PsycholexApplication, input_path: Optional[str], positive: str, control: str,
              smoothing: Optional[float], log_base: Optional[str], sample_fraction: Optional[float],
              seed: Optional[int], out_dir: Optional[str]) -> None:
    """词表重叠、语言模型与 KL 散度"""
    app.override(input__path=input_path, analysis__lambda=smoothing, analysis__log_base=log_base,
                 analysis__sample_fraction=sample_fraction, analysis__seed=seed,
                 output__directory=out_dir)
    app.execute(["openvocab"], pairs=[(positive, control)])


@cli.command()
@input_option
@click.option('--lexicon', 'lexicons', multiple=True, type=click.Path(exists=True, dir_okay=False),
              help='Category lexicon (.dic or TSV); repeatable')
@click.option('--classes', required=True, help='Comma-separated class labels')
@click.option('--categories', help='Comma-separated categories to keep')
@click.option('--alpha', type=float, help='Significance threshold')
@out_option
@click.pass_obj
@handle_errors
def lexicon(app: PsycholexApplication, input_path: Optional[str], lexicons: Tuple[str, ...],
            classes: str, categories: Optional[str], alpha: Optional[float],
            out_dir: Optional[str]) -> None:
    """词典类别的文档比例与 Welch 检验"""
    app.override(input__path=input_path, lexicons__categories=list(lexicons) or None,
                 lexicons__category_filter=split_classes(categories) or None,
                 analysis__alpha=alpha, output__directory=out_dir)
    labels = split_classes(classes)
    app.execute(["lexicons"], pairs=pairs_for_classes(app.config, labels), classes=labels)


@cli.command()
@input_option
@click.option('--lexicon', 'emotion_lexicon', type=click.Path(exists=True, dir_okay=False),
              help='NRC-style emotion lexicon')
@click.option('--classes', required=True, help='Comma-separated class labels')
@click.option('--correlation', type=click.Choice(['pearson', 'spearman']), help='Correlation coefficient')
@click.option('--correlation-input', type=click.Choice(['fractions', 'counts']),
              help='Per-user values fed to the correlation')
@click.option('--alpha', type=float, help='Significance threshold')
@out_option
@click.pass_obj
@handle_errors
def emotion(app: PsycholexApplication, input_path: Optional[str], emotion_lexicon: Optional[str],
            classes: str, correlation: Optional[str], correlation_input: Optional[str],
            alpha: Optional[float], out_dir: Optional[str]) -> None:
    """情感雷达图、相关热力图与 Welch 检验"""
    app.override(input__path=input_path, lexicons__emotions=emotion_lexicon,
                 analysis__correlation__method=correlation,
                 analysis__correlation__input=correlation_input,
                 analysis__alpha=alpha, output__directory=out_dir)
    labels = split_classes(classes)
    app.execute(["emotions"], pairs=pairs_for_classes(app.config, labels), classes=labels)


@cli.command()
@input_option
@click.option('--classes', required=True, help='Comma-separated class labels')
@click.option('--alpha', type=float, help='Significance threshold')
@out_option
@click.pass_obj
@handle_errors
def behavior(app: PsycholexApplication, input_path: Optional[str], classes: str,
             alpha: Optional[float], out_dir: Optional[str]) -> None:
    """互动标记与按月发帖时间间隔"""
    app.override(input__path=input_path, analysis__alpha=alpha, output__directory=out_dir)
    labels = split_classes(classes)
    app.execute(["behavior"], pairs=pairs_for_classes(app.config, labels), classes=labels)


@cli.command()
@click.option('--report', 'report_path', required=True, type=click.Path(exists=True),
              help='report.json or the directory containing it')
@out_option
@click.pass_obj
@handle_errors
def report(app: PsycholexApplication, report_path: str, out_dir: Optional[str]) -> None:
    """用 report.json 中的数据重新渲染图表"""
    from .report import rerender

    app.init()
    paths = rerender(report_path, out_dir)
    for path in paths:
        click.echo(str(path))


@cli.command('run-all')
@click.option('--config', '-c', 'config_file', type=click.Path(exists=True, dir_okay=False),
              help='Configuration file path (overrides the group option)')
@input_option
@click.option('--lambda', 'smoothing', type=float, help='Jelinek-Mercer smoothing weight in (0, 1)')
@click.option('--log-base', type=click.Choice(['2', 'e']), help='Logarithm base for KL divergence')
@click.option('--alpha', type=float, help='Significance threshold')
@click.option('--threads', type=int, help='Worker threads for independent cohort pairs')
@seed_option
@out_option
@click.pass_obj
@handle_errors
def run_all(app: PsycholexApplication, config_file: Optional[str], input_path: Optional[str],
            smoothing: Optional[float], log_base: Optional[str], alpha: Optional[float],
            threads: Optional[int], seed: Optional[int], out_dir: Optional[str]) -> None:
    """执行配置中选定的全部分析并写出报告"""
    if config_file:
        app.config_file = config_file
    app.override(input__path=input_path, analysis__lambda=smoothing, analysis__log_base=log_base,
                 analysis__alpha=alpha, performance__max_workers=threads, analysis__seed=seed,
                 output__directory=out_dir)
    app.execute(app.config.get('analysis.selected') or ())


@cli.command()
@click.option('--out', '-o', 'out_dir', required=True, type=click.Path(file_okay=False),
              help='Directory for synthetic_<platform>.jsonl files')
@click.option('--users', type=int, default=50, show_default=True, help='Users per class')
@click.option('--documents', type=int, default=40, show_default=True, help='Documents per user')
@click.option('--tokens', type=int, default=20, show_default=True, help='Tokens per document')
@click.option('--platform', 'platforms', multiple=True, type=click.Choice(['twitter', 'reddit']),
              help='Platforms to generate (default: both)')
@seed_option
@click.pass_obj
@handle_errors
def generate(app: PsycholexApplication, out_dir: str, users: int, documents: int, tokens: int,
             platforms: Tuple[str, ...], seed: Optional[int]) -> None:
    """生成可复现的合成语料"""
    from .corpus import SyntheticConfig, write_synthetic

    config = app.init()
    synthetic = SyntheticConfig(
        platforms=tuple(platforms) or ("twitter", "reddit"),
        users_per_class=users,
        documents_per_user=documents,
        tokens_per_document=tokens,
        seed=seed if seed is not None else config.seed,
    )
    for platform, path in write_synthetic(synthetic, out_dir).items():
        click.echo(f"{platform}\t{path}")


def main() -> None:
    cli(prog_name="psycholex")


if __name__ == '__main__':
    main()
