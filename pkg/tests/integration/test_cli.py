"""
命令行集成测试
"""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from conftest import SAMPLE_CORPUS, record, write_jsonl
from psycholex import __version__
from psycholex.main import (
    EXIT_CONFIG_ERROR,
    EXIT_ERROR,
    EXIT_UNEXPECTED,
    cli,
    pairs_for_classes,
    split_classes,
)
from psycholex.common.config import Config
from psycholex.pipeline import AnalysisPipeline


DEV_CONFIG = Path(__file__).resolve().parent.parent.parent / "config" / "development.yaml"
QUIET = ["--log-level", "ERROR"]


@pytest.fixture(autouse=True)
def isolated(tmp_path, monkeypatch):
    """不让当前目录下的配置文件与环境变量影响命令行"""
    monkeypatch.chdir(tmp_path)
    for var in ("PSYCHOLEX_THREADS", "PSYCHOLEX_LOG_LEVEL", "PSYCHOLEX_SEED", "PSYCHOLEX_OUTPUT", "PSYCHOLEX_DEBUG"):
        monkeypatch.delenv(var, raising=False)


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, [*QUIET, *[str(a) for a in args]], catch_exceptions=False)


def output_json(result):
    """输出中可能夹有 stderr 日志行，JSON 从第一个以 { 开头的行开始"""
    lines = result.output.splitlines()
    start = next(i for i, line in enumerate(lines) if line.startswith("{"))
    return json.loads("\n".join(lines[start:]))


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_ingest_prints_summary(runner, tmp_path):
    export = tmp_path / "export.jsonl"
    result = invoke(runner, "ingest", "--input", SAMPLE_CORPUS, "--export", export)
    assert result.exit_code == 0
    summary = output_json(result)
    assert summary["platform"] == "twitter"
    assert summary["records"] == 24
    assert {c["class_label"] for c in summary["cohorts"]} == {"control", "depression"}
    assert len(export.read_text(encoding="utf-8").splitlines()) == 24


def test_ingest_strict_and_lenient(runner, tmp_path):
    path = write_jsonl(tmp_path / "bad.jsonl", [
        record("a", "u1", "p"), "{not json", record("b", "u2", "c"),
    ])
    strict = invoke(runner, "ingest", "--input", path)
    assert strict.exit_code == EXIT_ERROR
    assert '"code": 1001' in strict.output
    lenient = invoke(runner, "ingest", "--input", path, "--lenient")
    assert lenient.exit_code == 0
    assert output_json(lenient)["skipped"] == 1


def test_ingest_without_input_is_config_error(runner):
    result = invoke(runner, "ingest")
    assert result.exit_code == EXIT_CONFIG_ERROR
    assert "No input corpus given" in result.output


def test_generate(runner, tmp_path):
    result = invoke(runner, "generate", "--out", tmp_path, "--users", 2, "--documents", 3,
                    "--platform", "twitter", "--seed", 5)
    assert result.exit_code == 0
    path = tmp_path / "synthetic_twitter.jsonl"
    assert f"twitter\t{path}" in result.output.splitlines()
    assert len(path.read_text(encoding="utf-8").splitlines()) == 2 * 2 * 3


def test_run_all_and_rerender(runner, tmp_path):
    result = invoke(runner, "--config", DEV_CONFIG, "run-all", "--out", tmp_path, "--threads", 2)
    assert result.exit_code == 0
    payload = output_json(result)
    assert payload["output"] == str(tmp_path)
    assert "vocab_comparison" in payload["sections"]
    assert "timegap_plot" in payload["sections"]
    report_dir = tmp_path / "report"
    before = {p.name: p.read_bytes() for p in (report_dir / "charts").iterdir()}

    rendered = invoke(runner, "report", "--report", report_dir, "--out", tmp_path / "again")
    assert rendered.exit_code == 0
    paths = [Path(line) for line in rendered.output.splitlines() if line.endswith(".svg")]
    assert {p.name: p.read_bytes() for p in paths} == before


def test_run_all_config_option_on_subcommand(runner, tmp_path):
    result = invoke(runner, "run-all", "--config", DEV_CONFIG, "--out", tmp_path, "--log-base", "2")
    assert result.exit_code == 0
    metadata = json.loads((tmp_path / "report" / "metadata.json").read_text())
    assert metadata["config"]["log_base"] == "2"
    assert "generated_at" in metadata


def test_run_all_without_cohorts(runner, tmp_path):
    result = invoke(runner, "run-all", "--input", SAMPLE_CORPUS, "--out", tmp_path)
    assert result.exit_code == EXIT_CONFIG_ERROR


def test_openvocab_subcommand(runner, tmp_path):
    result = invoke(runner, "openvocab", "--input", SAMPLE_CORPUS, "--positive", "depression",
                    "--control", "control", "--lambda", 0.2, "--sample-fraction", 0.5, "--out", tmp_path)
    assert result.exit_code == 0
    sections = output_json(result)["sections"]
    assert sections[:2] == ["corpus_summary", "vocab_comparison"]
    assert "category_tests" not in sections
    report = json.loads((tmp_path / "report" / "report.json").read_text())
    assert report["metadata"]["config"]["lambda"] == 0.2


def test_openvocab_unknown_class(runner, tmp_path):
    result = invoke(runner, "openvocab", "--input", SAMPLE_CORPUS, "--positive", "anxiety",
                    "--control", "control", "--out", tmp_path)
    assert result.exit_code == EXIT_ERROR
    assert '"code": 1008' in result.output


def test_openvocab_bad_lambda(runner, tmp_path):
    result = invoke(runner, "openvocab", "--input", SAMPLE_CORPUS, "--positive", "depression",
                    "--control", "control", "--lambda", 1.5, "--out", tmp_path)
    assert result.exit_code == EXIT_CONFIG_ERROR


def test_lexicon_subcommand(runner, tmp_path):
    result = invoke(runner, "lexicon", "--input", SAMPLE_CORPUS, "--classes", "depression,control",
                    "--categories", "i,we", "--out", tmp_path)
    assert result.exit_code == 0
    assert output_json(result)["sections"] == ["corpus_summary", "category_tests", "category_boxplots"]
    rows = json.loads((tmp_path / "report" / "report.json").read_text())["sections"]
    tests = next(s for s in rows if s["name"] == "category_tests")["payload"]["rows"]
    assert {r["feature"] for r in tests} == {"i", "we"}


def test_emotion_subcommand(runner, tmp_path):
    result = invoke(runner, "emotion", "--input", SAMPLE_CORPUS, "--classes", "depression,control",
                    "--correlation", "spearman", "--out", tmp_path)
    assert result.exit_code == 0
    sections = output_json(result)["sections"]
    assert {"emotion_means", "emotion_radar", "emotion_tests", "emotion_heatmap"} <= set(sections)


def test_behavior_subcommand(runner, tmp_path):
    result = invoke(runner, "behavior", "--input", SAMPLE_CORPUS, "--classes", "depression,control",
                    "--out", tmp_path)
    assert result.exit_code == 0
    assert (tmp_path / "report" / "tables" / "monthly_gaps.csv").is_file()


def test_unexpected_error_exit_code(runner, tmp_path, monkeypatch):
    def boom(self, corpus=None):
        raise RuntimeError("boom")

    monkeypatch.setattr(AnalysisPipeline, "run_and_write", boom)
    result = invoke(runner, "behavior", "--input", SAMPLE_CORPUS, "--classes", "depression,control",
                    "--out", tmp_path)
    assert result.exit_code == EXIT_UNEXPECTED
    assert "RuntimeError" in result.output


def test_report_missing(runner, tmp_path):
    result = invoke(runner, "report", "--report", tmp_path)
    assert result.exit_code == EXIT_ERROR


def test_split_classes():
    assert split_classes(" depression, control ,") == ["depression", "control"]
    assert split_classes(None) == []


def test_pairs_for_classes():
    config = Config()
    config.set("cohorts.pairs", [{"positive": "depression", "control": "control"},
                                 {"positive": "anorexia", "control": "control"}])
    assert pairs_for_classes(config, ["anorexia", "control"]) == [("anorexia", "control")]
    assert pairs_for_classes(config, ["ptsd", "control", "depression"]) == [("depression", "control")]
    assert pairs_for_classes(config, ["ptsd", "bipolar", "x"]) == [("ptsd", "bipolar"), ("ptsd", "x")]
