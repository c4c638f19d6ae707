"""
SVG 图表

箱线图、雷达图、相关热力图、按月时间间隔折线图、语言模型排序曲线。
每个图表先把输入规整为 payload (可 JSON 序列化)，只依据 payload 绘制，
并把 payload 原样嵌入 <desc>，因此 report.json 中的数据可重新渲染出相同字节。
"""

import json
import math
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import svgwrite

from ..behavior.timegap import MonthlyGapTable
from ..common.exceptions import ReportError
from ..openvocab.language_model import RankCurves
from ..stats.correlation import CorrelationMatrix
from ..stats.descriptive import BoxStats
from ..stats.significance import Comparison
from .model import SectionKind, clean_value


WIDTH, HEIGHT = 800, 500
FONT = "sans-serif"

# Okabe-Ito 与 Tol muted 组合，色盲友好
PALETTE = (
    "#0072B2", "#E69F00", "#009E73", "#CC79A7", "#56B4E9", "#D55E00",
    "#332288", "#88CCEE", "#44AA99", "#AA4499", "#999933", "#000000",
)

# 发散色阶 -1 -> 0 -> 1
NEGATIVE_RGB = (33, 102, 172)
NEUTRAL_RGB = (247, 247, 247)
POSITIVE_RGB = (178, 24, 43)

MONTH_NAMES = ("Jan", "Feb", "Mar", "Apr", "May", "Jun",
               "Jul", "Aug", "Sep", "Oct", "Nov", "Dec")

PLOT_LEFT, PLOT_RIGHT = 70, 780
PLOT_TOP, PLOT_BOTTOM = 60, 410


def _r(value: float) -> float:
    return round(float(value), 2)


def _color(index: int) -> str:
    return PALETTE[index % len(PALETTE)]


def _new_drawing(title: str, payload: Dict[str, Any]) -> svgwrite.Drawing:
    dwg = svgwrite.Drawing(size=(WIDTH, HEIGHT), profile="full")
    dwg.attribs["viewBox"] = f"0 0 {WIDTH} {HEIGHT}"
    dwg.set_desc(title=title or None,
                 desc=json.dumps(payload, sort_keys=True, ensure_ascii=False, allow_nan=False))
    dwg.add(dwg.rect(insert=(0, 0), size=(WIDTH, HEIGHT), fill="#FFFFFF"))
    if title:
        dwg.add(dwg.text(title, insert=(WIDTH / 2, 28), font_size=16, font_family=FONT,
                         text_anchor="middle"))
    return dwg


def _legend(dwg: svgwrite.Drawing, labels: Sequence[str], x: float = PLOT_RIGHT - 150,
            y: float = PLOT_TOP) -> None:
    for i, label in enumerate(labels):
        row_y = y + i * 16
        dwg.add(dwg.rect(insert=(x, row_y), size=(10, 10), fill=_color(i)))
        dwg.add(dwg.text(label, insert=(x + 15, row_y + 9), font_size=11, font_family=FONT))


def _y_axis(dwg: svgwrite.Drawing, ticks: Sequence[Tuple[float, str]], label: str) -> None:
    dwg.add(dwg.line(start=(PLOT_LEFT, PLOT_TOP), end=(PLOT_LEFT, PLOT_BOTTOM),
                     stroke="#333333", stroke_width=1))
    dwg.add(dwg.line(start=(PLOT_LEFT, PLOT_BOTTOM), end=(PLOT_RIGHT, PLOT_BOTTOM),
                     stroke="#333333", stroke_width=1))
    for y, text in ticks:
        dwg.add(dwg.line(start=(PLOT_LEFT - 4, _r(y)), end=(PLOT_LEFT, _r(y)),
                         stroke="#333333", stroke_width=1))
        dwg.add(dwg.text(text, insert=(PLOT_LEFT - 7, _r(y + 3)), font_size=10,
                         font_family=FONT, text_anchor="end"))
    if label:
        x, y = 18, (PLOT_TOP + PLOT_BOTTOM) / 2
        dwg.add(dwg.text(label, insert=(x, y), font_size=11, font_family=FONT,
                         text_anchor="middle", transform=f"rotate(-90 {x} {y})"))


def _linear(lo: float, hi: float) -> Callable[[float], float]:
    if hi <= lo:
        hi = lo + 1.0
    span = hi - lo
    return lambda v: PLOT_BOTTOM - (float(v) - lo) / span * (PLOT_BOTTOM - PLOT_TOP)


def _linear_ticks(lo: float, hi: float, scale: Callable[[float], float], count: int = 5) -> List[Tuple[float, str]]:
    if hi <= lo:
        hi = lo + 1.0
    step = (hi - lo) / count
    return [(scale(lo + i * step), f"{lo + i * step:.3g}") for i in range(count + 1)]


# ---------------------------------------------------------------- 箱线图

def _box_dict(box: Union[BoxStats, Mapping[str, Any]]) -> Dict[str, Any]:
    return box.to_dict() if isinstance(box, BoxStats) else dict(box)


def markers_from_comparisons(comparisons: Sequence[Comparison]) -> Dict[str, Dict[str, str]]:
    """显著比较 -> {特征: {正例类别: "*" / "^" / "*^"}}"""
    markers: Dict[str, Dict[str, str]] = {}
    for comparison in comparisons:
        symbol = comparison.marker
        if not symbol:
            continue
        per_class = markers.setdefault(comparison.feature, {})
        current = per_class.get(comparison.group_a, "")
        if symbol not in current:
            per_class[comparison.group_a] = "".join(sorted(current + symbol, key="*^".index))
    return markers


def boxplot_payload(groups: Mapping[str, Mapping[str, Union[BoxStats, Mapping[str, Any]]]],
                    markers: Optional[Mapping[str, Mapping[str, str]]] = None,
                    y_label: str = "") -> Dict[str, Any]:
    if not groups or not any(groups.values()):
        raise ReportError("Box plot needs at least one group")
    features = list(groups)
    classes: List[str] = []
    for per_class in groups.values():
        for label in per_class:
            if label not in classes:
                classes.append(label)
    return clean_value({
        "features": features,
        "classes": classes,
        "boxes": {f: {c: _box_dict(b) for c, b in per_class.items()} for f, per_class in groups.items()},
        "markers": {f: dict(m) for f, m in (markers or {}).items() if m},
        "y_label": y_label,
    })


def draw_boxplot(payload: Dict[str, Any], title: str = "") -> str:
    features, classes, boxes = payload["features"], payload["classes"], payload["boxes"]
    markers = payload.get("markers", {})
    dwg = _new_drawing(title, payload)

    values = [v for f in features for b in boxes[f].values()
              for v in [b["min"], b["max"]]]
    lo = min(0.0, min(values))
    hi = max(values)
    hi = hi + (hi - lo) * 0.1 if hi > lo else lo + 1.0
    scale = _linear(lo, hi)
    _y_axis(dwg, _linear_ticks(lo, hi, scale), payload.get("y_label", ""))

    band = (PLOT_RIGHT - PLOT_LEFT) / len(features)
    box_width = min(40.0, band * 0.8 / len(classes))
    for fi, feature in enumerate(features):
        center = PLOT_LEFT + band * (fi + 0.5)
        x0 = center - box_width * len(classes) / 2
        for ci, label in enumerate(classes):
            box = boxes[feature].get(label)
            if box is None:
                continue
            color = _color(ci)
            left = x0 + ci * box_width + 2
            width = box_width - 4
            mid = left + width / 2
            group = dwg.g(stroke=color, stroke_width=1.5)
            group.add(dwg.line(start=(_r(mid), _r(scale(box["lower_whisker"]))),
                               end=(_r(mid), _r(scale(box["q1"])))))
            group.add(dwg.line(start=(_r(mid), _r(scale(box["q3"]))),
                               end=(_r(mid), _r(scale(box["upper_whisker"])))))
            for whisker in ("lower_whisker", "upper_whisker"):
                y = _r(scale(box[whisker]))
                group.add(dwg.line(start=(_r(left + width / 4), y), end=(_r(left + width * 3 / 4), y)))
            top = scale(box["q3"])
            group.add(dwg.rect(insert=(_r(left), _r(top)),
                               size=(_r(width), _r(scale(box["q1"]) - top)),
                               fill=color, fill_opacity=0.25))
            group.add(dwg.line(start=(_r(left), _r(scale(box["median"]))),
                               end=(_r(left + width), _r(scale(box["median"]))), stroke_width=2.5))
            for outlier in box.get("outliers", []):
                group.add(dwg.circle(center=(_r(mid), _r(scale(outlier))), r=2, fill="none"))
            dwg.add(group)

            symbol = markers.get(feature, {}).get(label)
            if symbol:
                dwg.add(dwg.text(symbol, insert=(_r(mid), _r(scale(box["max"]) - 8)), font_size=14,
                                 font_family=FONT, text_anchor="middle", class_="significance"))
        x, y = _r(center), PLOT_BOTTOM + 16
        dwg.add(dwg.text(feature, insert=(x, y), font_size=10, font_family=FONT,
                         text_anchor="end", transform=f"rotate(-30 {x} {y})"))
    _legend(dwg, classes)
    return dwg.tostring()


def render_boxplot(groups: Mapping[str, Mapping[str, Union[BoxStats, Mapping[str, Any]]]],
                   markers: Optional[Mapping[str, Mapping[str, str]]] = None,
                   title: str = "", y_label: str = "") -> str:
    """分组箱线图; markers 为 {特征: {类别: 标记}}"""
    return draw_boxplot(boxplot_payload(groups, markers, y_label), title)


# ---------------------------------------------------------------- 雷达图

def radar_payload(class_means: Mapping[str, Mapping[str, float]],
                  axes: Optional[Sequence[str]] = None) -> Dict[str, Any]:
    if not class_means:
        raise ReportError("Radar chart needs at least one class")
    if axes is None:
        axes = list(next(iter(class_means.values())))
    for label, values in class_means.items():
        for axis in axes:
            value = values.get(axis, 0.0)
            if value < 0 or not math.isfinite(value):
                raise ReportError("Radar values must be finite and non-negative",
                                  details={"class_label": label, "axis": axis, "value": value})
    return clean_value({
        "axes": list(axes),
        "classes": list(class_means),
        "values": {label: {axis: float(values.get(axis, 0.0)) for axis in axes}
                   for label, values in class_means.items()},
    })


def draw_radar(payload: Dict[str, Any], title: str = "") -> str:
    axes, classes, values = payload["axes"], payload["classes"], payload["values"]
    dwg = _new_drawing(title, payload)
    cx, cy, radius = 330.0, 270.0, 180.0
    top = max((values[c][a] for c in classes for a in axes), default=0.0)
    if top <= 0:
        top = 1.0

    def point(index: int, fraction: float) -> Tuple[float, float]:
        angle = 2 * math.pi * index / len(axes)
        return _r(cx + radius * fraction * math.sin(angle)), _r(cy - radius * fraction * math.cos(angle))

    for ring in (0.25, 0.5, 0.75, 1.0):
        dwg.add(dwg.polygon([point(i, ring) for i in range(len(axes))], fill="none",
                            stroke="#CCCCCC", stroke_width=1))
        x, y = point(0, ring)
        dwg.add(dwg.text(f"{top * ring:.3g}", insert=(x + 4, y), font_size=9, font_family=FONT,
                         fill="#666666"))
    for i, axis in enumerate(axes):
        dwg.add(dwg.line(start=(cx, cy), end=point(i, 1.0), stroke="#CCCCCC", stroke_width=1))
        x, y = point(i, 1.12)
        dwg.add(dwg.text(axis, insert=(x, y), font_size=11, font_family=FONT, text_anchor="middle"))
    for ci, label in enumerate(classes):
        color = _color(ci)
        dwg.add(dwg.polygon([point(i, values[label][a] / top) for i, a in enumerate(axes)],
                            fill=color, fill_opacity=0.15, stroke=color, stroke_width=2))
    _legend(dwg, classes, x=620, y=PLOT_TOP)
    return dwg.tostring()


def render_radar(class_means: Mapping[str, Mapping[str, float]],
                 axes: Optional[Sequence[str]] = None, title: str = "") -> str:
    """每个类别一个多边形，共享从 0 开始的线性刻度"""
    return draw_radar(radar_payload(class_means, axes), title)


# ---------------------------------------------------------------- 热力图

def diverging_color(value: float) -> str:
    """[-1, 1] 映射到 蓝-白-红"""
    v = max(-1.0, min(1.0, float(value)))
    end = POSITIVE_RGB if v >= 0 else NEGATIVE_RGB
    t = abs(v)
    rgb = tuple(round(n + (e - n) * t) for n, e in zip(NEUTRAL_RGB, end))
    return "#{:02X}{:02X}{:02X}".format(*rgb)


def heatmap_payload(matrices: Sequence[Union[CorrelationMatrix, Mapping[str, Any]]]) -> Dict[str, Any]:
    if not matrices:
        raise ReportError("Heatmap needs at least one matrix")
    items = [m.to_dict() if isinstance(m, CorrelationMatrix) else dict(m) for m in matrices]
    labels = items[0]["labels"]
    for item in items[1:]:
        if item["labels"] != labels:
            raise ReportError("Heatmap matrices do not share labels",
                              details={"class_label": item.get("class_label")})
    return clean_value({"labels": list(labels), "matrices": items})


def draw_heatmap(payload: Dict[str, Any], title: str = "") -> str:
    labels, matrices = payload["labels"], payload["matrices"]
    dwg = _new_drawing(title, payload)
    panel_width = (WIDTH - 60) / len(matrices)
    cell = min((panel_width - 90) / len(labels), (HEIGHT - 170) / len(labels))
    for pi, matrix in enumerate(matrices):
        left = 20 + pi * panel_width + 80
        top = 90.0
        dwg.add(dwg.text(matrix.get("class_label", ""), insert=(_r(left + cell * len(labels) / 2), 62),
                         font_size=13, font_family=FONT, text_anchor="middle"))
        for i, row_label in enumerate(labels):
            y = top + i * cell
            dwg.add(dwg.text(row_label, insert=(_r(left - 4), _r(y + cell * 0.65)), font_size=9,
                             font_family=FONT, text_anchor="end"))
            for j in range(len(labels)):
                value = matrix["values"][i][j]
                x = left + j * cell
                if value is None:
                    dwg.add(dwg.rect(insert=(_r(x), _r(y)), size=(_r(cell), _r(cell)),
                                     fill="none", stroke="#EEEEEE", stroke_width=0.5))
                    continue
                dwg.add(dwg.rect(insert=(_r(x), _r(y)), size=(_r(cell), _r(cell)),
                                 fill=diverging_color(value), stroke="#FFFFFF", stroke_width=0.5))
        bottom = top + cell * len(labels)
        for j, col_label in enumerate(labels):
            x, y = _r(left + (j + 0.5) * cell), _r(bottom + 10)
            dwg.add(dwg.text(col_label, insert=(x, y), font_size=9, font_family=FONT,
                             text_anchor="end", transform=f"rotate(-45 {x} {y})"))

    # 色阶图例，固定 [-1, 1]
    steps = 20
    x0, y0, bar_width = WIDTH / 2 - 100, HEIGHT - 28, 200.0
    for k in range(steps):
        value = -1.0 + 2.0 * (k + 0.5) / steps
        dwg.add(dwg.rect(insert=(_r(x0 + k * bar_width / steps), y0), size=(_r(bar_width / steps), 10),
                         fill=diverging_color(value)))
    for value, x in ((-1, x0), (0, x0 + bar_width / 2), (1, x0 + bar_width)):
        dwg.add(dwg.text(str(value), insert=(_r(x), y0 + 22), font_size=9, font_family=FONT,
                         text_anchor="middle"))
    return dwg.tostring()


def render_heatmap(matrices: Sequence[Union[CorrelationMatrix, Mapping[str, Any]]], title: str = "") -> str:
    """并排的相关矩阵热力图，空值单元格留白"""
    return draw_heatmap(heatmap_payload(matrices), title)


# ---------------------------------------------------------------- 时间间隔

def timegap_payload(table: Union[MonthlyGapTable, Mapping[str, Any]]) -> Dict[str, Any]:
    if not isinstance(table, MonthlyGapTable):
        table = MonthlyGapTable.from_dict(table)
    if table.is_empty():
        raise ReportError("Time-gap chart needs a non-empty table")
    return clean_value({"classes": table.class_labels, "cells": table.to_dict(), "unit": "hours"})


def _month_runs(months: Sequence[int]) -> List[List[int]]:
    runs: List[List[int]] = []
    for month in months:
        if runs and runs[-1][-1] == month - 1:
            runs[-1].append(month)
        else:
            runs.append([month])
    return runs


def draw_timegap(payload: Dict[str, Any], title: str = "") -> str:
    classes, cells = payload["classes"], payload["cells"]
    dwg = _new_drawing(title, payload)
    hours = 3600.0
    tops = [(c["mean"] + c["std"]) / hours for label in classes for c in cells[label].values()]
    hi = max(tops) * 1.1 if tops and max(tops) > 0 else 1.0
    scale = _linear(0.0, hi)
    _y_axis(dwg, _linear_ticks(0.0, hi, scale), "mean time-gap (hours)")

    step = (PLOT_RIGHT - PLOT_LEFT) / 12

    def x_of(month: int) -> float:
        return _r(PLOT_LEFT + step * (month - 0.5))

    for month, name in enumerate(MONTH_NAMES, start=1):
        dwg.add(dwg.text(name, insert=(x_of(month), PLOT_BOTTOM + 16), font_size=10,
                         font_family=FONT, text_anchor="middle"))

    for ci, label in enumerate(classes):
        color = _color(ci)
        months = sorted(int(m) for m in cells[label])
        for run in _month_runs(months):
            stats = [cells[label][str(m)] for m in run]
            upper = [(x_of(m), _r(scale((s["mean"] + s["std"]) / hours))) for m, s in zip(run, stats)]
            lower = [(x_of(m), _r(scale(max(s["mean"] - s["std"], 0.0) / hours))) for m, s in zip(run, stats)]
            line = [(x_of(m), _r(scale(s["mean"] / hours))) for m, s in zip(run, stats)]
            if len(run) > 1:
                dwg.add(dwg.polygon(upper + lower[::-1], fill=color, fill_opacity=0.15, stroke="none"))
                dwg.add(dwg.polyline(line, fill="none", stroke=color, stroke_width=2))
            else:
                dwg.add(dwg.line(start=upper[0], end=lower[0], stroke=color, stroke_width=6,
                                 stroke_opacity=0.15))
            for x, y in line:
                dwg.add(dwg.circle(center=(x, y), r=3, fill=color))
    _legend(dwg, classes)
    return dwg.tostring()


def render_timegap(table: Union[MonthlyGapTable, Mapping[str, Any]], title: str = "") -> str:
    """每类一条按月均值折线与 ±1 标准差带，缺失月份断开"""
    return draw_timegap(timegap_payload(table), title)


# ---------------------------------------------------------------- 语言模型曲线

def lm_payload(curves: Union[RankCurves, Mapping[str, Any]]) -> Dict[str, Any]:
    if isinstance(curves, RankCurves):
        data = {"words": list(curves.words), "classes": list(curves.series),
                "series": {k: list(v) for k, v in curves.series.items()}}
    else:
        data = dict(curves)
        data.setdefault("classes", list(data["series"]))
    if not data["words"]:
        raise ReportError("Language model plot needs at least one word")
    return clean_value(data)


def draw_lm_plot(payload: Dict[str, Any], title: str = "") -> str:
    words, classes, series = payload["words"], payload["classes"], payload["series"]
    dwg = _new_drawing(title, payload)
    positive = [p for label in classes for p in series[label] if p and p > 0]
    if not positive:
        raise ReportError("Language model plot has no positive probabilities")
    lo = math.floor(math.log10(min(positive)))
    hi = math.ceil(math.log10(max(positive)))
    if hi == lo:
        hi = lo + 1
    scale = _linear(lo, hi)
    ticks = [(scale(e), f"1e{e}") for e in range(lo, hi + 1)]
    _y_axis(dwg, ticks, "P(w)")

    n = len(words)
    span = PLOT_RIGHT - PLOT_LEFT

    def x_of(rank: int) -> float:
        return _r(PLOT_LEFT + span * (rank + 0.5) / n)

    for ci, label in enumerate(classes):
        points = [(x_of(i), _r(scale(math.log10(p)))) for i, p in enumerate(series[label]) if p and p > 0]
        if len(points) == 1:
            dwg.add(dwg.circle(center=points[0], r=3, fill=_color(ci)))
        elif points:
            dwg.add(dwg.polyline(points, fill="none", stroke=_color(ci), stroke_width=1.5))
    dwg.add(dwg.text("word rank (by collection probability)",
                     insert=((PLOT_LEFT + PLOT_RIGHT) / 2, PLOT_BOTTOM + 30),
                     font_size=11, font_family=FONT, text_anchor="middle"))
    _legend(dwg, classes)
    return dwg.tostring()


def render_lm_plot(curves: Union[RankCurves, Mapping[str, Any]], title: str = "") -> str:
    """对数纵轴的词排序概率曲线"""
    return draw_lm_plot(lm_payload(curves), title)


DRAWERS: Dict[SectionKind, Callable[[Dict[str, Any], str], str]] = {
    SectionKind.BOXPLOT: draw_boxplot,
    SectionKind.RADAR: draw_radar,
    SectionKind.HEATMAP: draw_heatmap,
    SectionKind.LINEPLOT: draw_timegap,
    SectionKind.LMPLOT: draw_lm_plot,
}


def draw_section(kind: SectionKind, payload: Dict[str, Any], title: str = "") -> str:
    """按图表类型从 payload 渲染"""
    try:
        drawer = DRAWERS[kind]
    except KeyError:
        raise ReportError(f"No renderer for section kind: {kind}")
    try:
        return drawer(payload, title)
    except (KeyError, TypeError, IndexError) as exc:
        raise ReportError(f"Malformed {kind.value} payload: {exc}")
