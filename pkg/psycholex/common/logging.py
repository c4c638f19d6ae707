"""
psycholex 日志系统

structlog 负责结构化事件，底层仍走标准库 logging，
所以按模块设置日志级别的方式与配置文件中的 logging.loggers 一致。
进度与警告一律输出到 stderr，数据只写文件或 stdout。
"""

import logging
import sys
from typing import Dict, Optional

import structlog


def setup_logging(level: str = "INFO",
                  fmt: str = "text",
                  loggers: Optional[Dict[str, str]] = None) -> None:
    """配置日志"""
    numeric_level = getattr(logging, str(level).upper(), logging.INFO)

    logging.basicConfig(
        level=numeric_level,
        format="%(message)s",
        stream=sys.stderr,
        force=True,
    )

    # 设置各模块日志级别
    for logger_name, logger_level in (loggers or {}).items():
        logging.getLogger(logger_name).setLevel(
            getattr(logging, str(logger_level).upper(), numeric_level))

    if fmt == "json":
        renderer = structlog.processors.JSONRenderer(sort_keys=True)
    else:
        renderer = structlog.dev.ConsoleRenderer(colors=False)

    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="iso", utc=True),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            renderer,
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )
