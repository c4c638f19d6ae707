"""
分析报告数据模型

report.json 只包含确定性内容；生成时间、耗时与内存峰值只写入 metadata.json。
"""

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional

import numpy as np

from .. import __version__
from ..common.exceptions import ReportError


ARTIFACT_VERSION = __version__


class SectionKind(str, Enum):
    TABLE = "table"
    BOXPLOT = "boxplot"
    RADAR = "radar"
    HEATMAP = "heatmap"
    LINEPLOT = "lineplot"
    LMPLOT = "lmplot"


CHART_KINDS = frozenset(kind for kind in SectionKind if kind is not SectionKind.TABLE)


def clean_value(value: Any) -> Any:
    """转为可 JSON 序列化的值，非有限浮点数变为 None"""
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    if isinstance(value, Mapping):
        return {str(k): clean_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset, np.ndarray)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [clean_value(v) for v in items]
    return value


def dumps(payload: Any) -> str:
    """确定性 JSON 文本"""
    return json.dumps(clean_value(payload), sort_keys=True, indent=2,
                      ensure_ascii=False, allow_nan=False) + "\n"


@dataclass
class ReportSection:
    """一个表格或图表; 图表的 payload 即渲染所用数据"""
    kind: SectionKind
    name: str
    title: str
    payload: Dict[str, Any]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "name": self.name,
            "title": self.title,
            "payload": clean_value(self.payload),
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'ReportSection':
        try:
            kind = SectionKind(data["kind"])
            return cls(kind, data["name"], data.get("title", data["name"]), dict(data["payload"]))
        except (KeyError, ValueError, TypeError) as exc:
            raise ReportError(f"Invalid report section: {exc}", details={"section": data.get("name")})


@dataclass
class AnalysisReport:
    metadata: Dict[str, Any]
    sections: List[ReportSection] = field(default_factory=list)

    def add_table(self, name: str, rows: List[Dict[str, Any]], columns: Optional[List[str]] = None,
                  title: Optional[str] = None) -> ReportSection:
        if columns is None:
            columns = list(rows[0]) if rows else []
        return self._add(SectionKind.TABLE, name, title or name, {"columns": columns, "rows": rows})

    def add_chart(self, kind: SectionKind, name: str, payload: Dict[str, Any],
                  title: Optional[str] = None) -> ReportSection:
        if kind not in CHART_KINDS:
            raise ReportError(f"Not a chart kind: {kind}", details={"name": name})
        return self._add(kind, name, title or name, payload)

    def _add(self, kind: SectionKind, name: str, title: str, payload: Dict[str, Any]) -> ReportSection:
        if any(section.name == name and section.kind == kind for section in self.sections):
            raise ReportError(f"Duplicate report section: {name}", details={"kind": kind.value})
        section = ReportSection(kind, name, title, payload)
        self.sections.append(section)
        return section

    def tables(self) -> List[ReportSection]:
        return [s for s in self.sections if s.kind is SectionKind.TABLE]

    def charts(self) -> List[ReportSection]:
        return [s for s in self.sections if s.kind in CHART_KINDS]

    def section(self, name: str) -> ReportSection:
        for s in self.sections:
            if s.name == name:
                return s
        raise ReportError(f"No report section named {name}",
                          details={"available": [s.name for s in self.sections]})

    def to_dict(self) -> Dict[str, Any]:
        return {
            "metadata": clean_value(self.metadata),
            "sections": [s.to_dict() for s in self.sections],
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'AnalysisReport':
        if "metadata" not in data or "sections" not in data:
            raise ReportError("Report is missing metadata or sections")
        return cls(dict(data["metadata"]), [ReportSection.from_dict(s) for s in data["sections"]])

    @classmethod
    def from_json(cls, text: str) -> 'AnalysisReport':
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ReportError(f"Report is not valid JSON: {exc.msg}", details={"line": exc.lineno})
        return cls.from_dict(data)
