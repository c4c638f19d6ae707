"""
报告目录输出

<out>/report/
    metadata.json      元数据 + 生成时间等运行信息
    report.json        完整 AnalysisReport (确定性)
    tables/*.csv
    charts/*.svg
    models/lm_<类别>.json
"""

import re
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence

import pandas as pd
import structlog

from ..common.exceptions import ReportError
from ..openvocab.language_model import LanguageModel
from .charts import draw_section
from .model import AnalysisReport, dumps


logger = structlog.get_logger(__name__)

REPORT_DIRNAME = "report"
FLOAT_FORMAT = "%.6f"

_UNSAFE = re.compile(r"[^A-Za-z0-9_.-]+")


def safe_name(name: str) -> str:
    """文件名中只保留安全字符"""
    cleaned = _UNSAFE.sub("_", name).strip("._")
    return cleaned or "unnamed"


class ReportWriter:
    """把 AnalysisReport 写入报告目录"""

    def __init__(self, output_dir: str, subdir: str = REPORT_DIRNAME):
        self.root = Path(output_dir) / subdir if subdir else Path(output_dir)
        self.tables_dir = self.root / "tables"
        self.charts_dir = self.root / "charts"
        self.models_dir = self.root / "models"

    def _prepare(self) -> None:
        try:
            for directory in (self.root, self.tables_dir, self.charts_dir):
                directory.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise ReportError(f"Cannot create report directory: {exc}", details={"path": str(self.root)})

    def _write_text(self, path: Path, text: str) -> Path:
        try:
            with open(path, "w", encoding="utf-8", newline="\n") as f:
                f.write(text)
        except OSError as exc:
            raise ReportError(f"Cannot write report file: {exc}", details={"path": str(path)})
        return path

    def write_table(self, name: str, rows: List[Dict[str, Any]], columns: Sequence[str]) -> Path:
        path = self.tables_dir / f"{safe_name(name)}.csv"
        frame = pd.DataFrame(rows, columns=list(columns))
        try:
            frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
        except OSError as exc:
            raise ReportError(f"Cannot write table: {exc}", details={"path": str(path)})
        return path

    def write_charts(self, report: AnalysisReport) -> List[Path]:
        paths = []
        for section in report.charts():
            svg = draw_section(section.kind, section.payload, section.title)
            paths.append(self._write_text(self.charts_dir / f"{safe_name(section.name)}.svg", svg))
        return paths

    def write_models(self, models: Mapping[str, LanguageModel]) -> List[Path]:
        """models: 文件名主干 -> 模型"""
        self.models_dir.mkdir(parents=True, exist_ok=True)
        paths = []
        for stem, model in models.items():
            payload = {
                "class_label": model.class_label,
                "collection": model.collection_label,
                "smoothing": model.smoothing,
                "probabilities": model.as_dict(),
            }
            path = self.models_dir / f"{safe_name(stem)}.json"
            paths.append(self._write_text(path, dumps(payload)))
        return paths

    def write(self, report: AnalysisReport, models: Optional[Mapping[str, LanguageModel]] = None,
              run_info: Optional[Mapping[str, Any]] = None) -> Path:
        """写出完整报告，返回报告目录"""
        self._prepare()
        for section in report.tables():
            self.write_table(section.name, section.payload["rows"], section.payload["columns"])
        charts = self.write_charts(report)
        if models:
            self.write_models(models)
        self._write_text(self.root / "report.json", report.to_json())

        metadata = dict(report.metadata)
        metadata["generated_at"] = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
        metadata.update(run_info or {})
        self._write_text(self.root / "metadata.json", dumps(metadata))
        logger.info("report_written", path=str(self.root), tables=len(report.tables()), charts=len(charts))
        return self.root


def load_report(path: str) -> AnalysisReport:
    """读取 report.json (可给出文件或其所在目录)"""
    report_path = Path(path)
    if report_path.is_dir():
        candidates = [report_path / "report.json", report_path / REPORT_DIRNAME / "report.json"]
        report_path = next((p for p in candidates if p.exists()), candidates[0])
    try:
        text = report_path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ReportError(f"Cannot read report: {exc}", details={"path": str(report_path)})
    return AnalysisReport.from_json(text)


def rerender(path: str, output_dir: Optional[str] = None) -> List[Path]:
    """用 report.json 中嵌入的数据重新渲染全部图表"""
    report = load_report(path)
    if output_dir is None:
        report_path = Path(path)
        root = report_path.parent if report_path.is_file() else report_path
        if (root / REPORT_DIRNAME / "report.json").exists():
            root = root / REPORT_DIRNAME
        writer = ReportWriter(str(root), subdir="")
    else:
        writer = ReportWriter(output_dir)
    writer.charts_dir.mkdir(parents=True, exist_ok=True)
    paths = writer.write_charts(report)
    logger.info("charts_rerendered", charts=len(paths), path=str(writer.charts_dir))
    return paths
