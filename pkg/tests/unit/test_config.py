"""
配置与异常测试
"""

import math

import pytest

from psycholex.common.config import (
    Config,
    apply_env_overrides,
    format_log_base,
    get_config,
    init_config,
    parse_log_base,
)
from psycholex.common.exceptions import ConfigurationError, IngestError, UnknownClassError


def test_defaults():
    config = Config()
    assert config.smoothing_lambda == 0.1
    assert config.alpha == 0.001
    assert config.log_base == math.e
    assert config.seed == 42
    assert config.max_workers == 4
    assert config.get("analysis.correlation.method") == "pearson"
    assert config.get("missing.key", "fallback") == "fallback"


def test_set_and_get_dot_keys():
    config = Config()
    config.set("analysis.lambda", 0.3)
    config.set("brand.new.key", 1)
    assert config.smoothing_lambda == 0.3
    assert config.get("brand.new.key") == 1


def test_file_merges_over_defaults(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text(
        "analysis:\n  lambda: 0.25\n  log_base: '2'\n"
        "input:\n  path: corpus.jsonl\n"
        "lexicons:\n  categories: [a.tsv]\n",
        encoding="utf-8",
    )
    config = Config(str(path))
    assert config.smoothing_lambda == 0.25
    assert config.log_base == 2.0
    # 未出现在文件中的键保持默认
    assert config.alpha == 0.001
    # 相对路径以配置文件目录为基准
    assert config.input_path == str(tmp_path / "corpus.jsonl")
    assert config.get("lexicons.categories") == [str(tmp_path / "a.tsv")]


def test_json_config_is_accepted(tmp_path):
    path = tmp_path / "run.json"
    path.write_text('{"analysis": {"alpha": 0.05}}', encoding="utf-8")
    assert Config(str(path)).alpha == 0.05


def test_missing_config_file():
    with pytest.raises(ConfigurationError):
        Config("/nonexistent/psycholex.yaml")


def test_env_overrides(monkeypatch):
    config = Config()
    monkeypatch.setenv("PSYCHOLEX_THREADS", "8")
    monkeypatch.setenv("PSYCHOLEX_SEED", "7")
    monkeypatch.setenv("PSYCHOLEX_DEBUG", "yes")
    monkeypatch.setenv("PSYCHOLEX_OUTPUT", "elsewhere")
    apply_env_overrides(config)
    assert config.max_workers == 8
    assert config.seed == 7
    assert config.debug_mode is True
    assert config.output_dir == "elsewhere"


def test_env_override_ignores_bad_int(monkeypatch):
    config = Config()
    monkeypatch.setenv("PSYCHOLEX_THREADS", "many")
    apply_env_overrides(config)
    assert config.max_workers == 4


def test_global_config(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    config = init_config()
    assert get_config() is config
    assert config.config_file is None


@pytest.mark.parametrize("value,expected", [("e", math.e), ("2", 2.0), (2, 2.0), ("bits", 2.0)])
def test_parse_log_base(value, expected):
    assert parse_log_base(value) == expected


def test_parse_log_base_rejects_ten():
    with pytest.raises(ConfigurationError):
        parse_log_base("10")


def test_format_log_base():
    assert format_log_base(2.0) == "2"
    assert format_log_base(math.e) == "e"


def test_error_dict_carries_module():
    error = IngestError("bad line", details={"line": 3})
    data = error.to_dict()
    assert data["code"] == 1001
    assert data["type"] == "IngestError"
    assert data["details"] == {"line": 3, "module": "corpus"}
    assert str(error).startswith("[1001] bad line")


def test_unknown_class_error():
    error = UnknownClassError("ptsd", ["control", "depression"])
    assert error.error_code == 1008
    assert error.class_label == "ptsd"
    assert error.details["available"] == ["control", "depression"]
