"""
报告模块

CSV/JSON 表格与自包含 SVG 图表
"""

from .charts import (
    PALETTE,
    boxplot_payload,
    diverging_color,
    draw_section,
    heatmap_payload,
    lm_payload,
    markers_from_comparisons,
    radar_payload,
    render_boxplot,
    render_heatmap,
    render_lm_plot,
    render_radar,
    render_timegap,
    timegap_payload,
)
from .model import ARTIFACT_VERSION, AnalysisReport, ReportSection, SectionKind, clean_value, dumps
from .writer import ReportWriter, load_report, rerender

__all__ = [
    "PALETTE",
    "boxplot_payload",
    "diverging_color",
    "draw_section",
    "heatmap_payload",
    "lm_payload",
    "markers_from_comparisons",
    "radar_payload",
    "render_boxplot",
    "render_heatmap",
    "render_lm_plot",
    "render_radar",
    "render_timegap",
    "timegap_payload",
    "ARTIFACT_VERSION",
    "AnalysisReport",
    "ReportSection",
    "SectionKind",
    "clean_value",
    "dumps",
    "ReportWriter",
    "load_report",
    "rerender",
]
