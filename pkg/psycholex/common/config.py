"""
psycholex 配置管理
"""

import copy
import math
import os
import yaml
from typing import Dict, Any, List, Optional
from pathlib import Path

from .exceptions import ConfigurationError


# 内置默认配置，配置文件在此基础上合并
DEFAULTS: Dict[str, Any] = {
    "input": {
        "path": None,
        "strict": True,
    },
    "cohorts": {
        # [{positive: depression, control: control}, ...]
        "pairs": [],
        # 额外的对照组间参考对比，缺省时对单一对照组做对半切分
        "control_pairs": [],
    },
    "lexicons": {
        "categories": [],
        "category_filter": [],
        "emotions": None,
        "emoticons": None,
    },
    "analysis": {
        "selected": ["openvocab", "lexicons", "emotions", "behavior"],
        "lambda": 0.1,
        "log_base": "e",
        "alpha": 0.001,
        "seed": 42,
        "sample_fraction": 0.1,
        "correlation": {
            "method": "pearson",
            "input": "fractions",
        },
        "lm_plot_points": 500,
        "distinctive_words": 20,
    },
    "output": {
        "directory": "out",
    },
    "performance": {
        "max_workers": 4,
    },
    "logging": {
        "level": "INFO",
        "format": "text",
        "loggers": {},
    },
    "development": {
        "debug": False,
    },
}


class Config:
    """配置管理类"""

    def __init__(self, config_file: Optional[str] = None):
        self._data: Dict[str, Any] = copy.deepcopy(DEFAULTS)
        self._config_file = config_file
        if config_file:
            self.load_from_file(config_file)

    @property
    def config_file(self) -> Optional[str]:
        return self._config_file

    def load_from_file(self, config_file: str) -> None:
        """从文件加载配置 (YAML 或 JSON)"""
        config_path = Path(config_file)
        if not config_path.exists():
            raise ConfigurationError(f"Configuration file not found: {config_file}")

        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                loaded = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Failed to parse configuration file: {e}")
        except OSError as e:
            raise ConfigurationError(f"Failed to load configuration file: {e}")

        if not isinstance(loaded, dict):
            raise ConfigurationError("Configuration root must be a mapping",
                                     details={"file": str(config_path)})

        self._config_file = str(config_path)
        self.update(loaded)
        self._resolve_paths(config_path.parent)

    def _resolve_paths(self, base: Path) -> None:
        """配置文件中的相对路径以配置文件所在目录为基准"""
        def resolve(value: Optional[str]) -> Optional[str]:
            if not value:
                return value
            path = Path(value)
            if path.is_absolute() or path.exists():
                return str(path)
            return str(base / path)

        self.set('input.path', resolve(self.get('input.path')))
        self.set('lexicons.emotions', resolve(self.get('lexicons.emotions')))
        self.set('lexicons.emoticons', resolve(self.get('lexicons.emoticons')))
        self.set('lexicons.categories',
                 [resolve(p) for p in self.get('lexicons.categories') or []])

    def get(self, key: str, default: Any = None) -> Any:
        """获取配置值，支持点号分隔的嵌套键"""
        keys = key.split('.')
        value = self._data

        try:
            for k in keys:
                value = value[k]
            return value
        except (KeyError, TypeError):
            return default

    def set(self, key: str, value: Any) -> None:
        """设置配置值"""
        keys = key.split('.')
        data = self._data

        for k in keys[:-1]:
            if k not in data or not isinstance(data[k], dict):
                data[k] = {}
            data = data[k]

        data[keys[-1]] = value

    def update(self, other_config: Dict[str, Any]) -> None:
        """更新配置"""
        self._merge_dict(self._data, other_config)

    def _merge_dict(self, base: Dict[str, Any], update: Dict[str, Any]) -> None:
        """递归合并字典"""
        for key, value in update.items():
            if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                self._merge_dict(base[key], value)
            else:
                base[key] = value

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        return copy.deepcopy(self._data)

    # 常用配置项的快捷访问
    @property
    def input_path(self) -> Optional[str]:
        return self.get('input.path')

    @property
    def strict(self) -> bool:
        return bool(self.get('input.strict', True))

    @property
    def cohort_pairs(self) -> List[Dict[str, str]]:
        return list(self.get('cohorts.pairs') or [])

    @property
    def smoothing_lambda(self) -> float:
        return float(self.get('analysis.lambda', 0.1))

    @property
    def log_base(self) -> float:
        return parse_log_base(self.get('analysis.log_base', 'e'))

    @property
    def alpha(self) -> float:
        return float(self.get('analysis.alpha', 0.001))

    @property
    def seed(self) -> int:
        return int(self.get('analysis.seed', 42))

    @property
    def output_dir(self) -> str:
        return self.get('output.directory', 'out')

    @property
    def max_workers(self) -> int:
        return max(1, int(self.get('performance.max_workers', 4)))

    @property
    def log_level(self) -> str:
        return self.get('logging.level', 'INFO')

    @property
    def log_format(self) -> str:
        return self.get('logging.format', 'text')

    @property
    def debug_mode(self) -> bool:
        return bool(self.get('development.debug', False))


def parse_log_base(value: Any) -> float:
    """解析对数底，只允许 2 或 e"""
    text = str(value).strip().lower()
    if text in ('e', 'ln', 'nat', 'nats'):
        return math.e
    if text in ('2', '2.0', 'bits'):
        return 2.0
    raise ConfigurationError(f"Unsupported log base: {value}", details={"allowed": ["2", "e"]})


def format_log_base(base: float) -> str:
    return "2" if base == 2.0 else "e"


# 全局配置实例
_global_config: Optional[Config] = None


def init_config(config_file: Optional[str] = None) -> Config:
    """初始化全局配置"""
    global _global_config

    if config_file is None:
        # 尝试自动查找配置文件
        possible_paths = [
            'config/development.yaml',
            'psycholex.yaml',
            'config.yaml'
        ]

        for path in possible_paths:
            if os.path.exists(path):
                config_file = path
                break

    _global_config = Config(config_file)
    return _global_config


def get_config() -> Config:
    """获取全局配置实例"""
    if _global_config is None:
        raise ConfigurationError("Configuration not initialized. Call init_config() first.")
    return _global_config


# 环境变量覆盖支持
def apply_env_overrides(config: Config) -> None:
    """应用环境变量覆盖"""
    env_mappings = {
        'PSYCHOLEX_THREADS': 'performance.max_workers',
        'PSYCHOLEX_LOG_LEVEL': 'logging.level',
        'PSYCHOLEX_SEED': 'analysis.seed',
        'PSYCHOLEX_OUTPUT': 'output.directory',
        'PSYCHOLEX_DEBUG': 'development.debug',
    }

    for env_var, config_key in env_mappings.items():
        value = os.getenv(env_var)
        if value is not None:
            # 尝试转换类型
            if config_key.endswith('.debug'):
                value = value.lower() in ('true', '1', 'yes', 'on')
            elif config_key.endswith(('max_workers', 'seed')):
                try:
                    value = int(value)
                except ValueError:
                    continue

            config.set(config_key, value)
