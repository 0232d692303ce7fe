# This Python file uses the following encoding: utf-8

"""
结果输出 - CSV 表格与 SVG 曲线图
"""

import csv
import io
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union
import matplotlib
from matplotlib.figure import Figure
from ..models import SweepRow, SweepSpec
from ..utils.config import Config
from ..utils.constants import SweepConstants
from ..utils.logger import get_logger
from ..utils.exceptions import OutputError, ValidationError

logger = get_logger(__name__)

PathLike = Union[str, Path]

_AXIS_LABELS = {
    "snr_db": "SNR ρ (dB)",
    "capacity_bits": "C (bits/complex dimension)",
    "antennas_m": "M (relay antennas)",
}


def format_value(value, digits: Optional[int] = None) -> str:
    """数值按有效数字格式化，None 写作 NA"""
    if value is None:
        return SweepConstants.NA
    if digits is None:
        digits = Config().get_significant_digits()
    if isinstance(value, float):
        if math.isnan(value):
            return SweepConstants.NA
        return f"{value:.{digits}g}"
    return str(value)


def write_text(text: str, path: PathLike) -> None:
    """path 为 "-" 时写到标准输出"""
    if str(path) == "-":
        sys.stdout.write(text)
        return
    try:
        with open(Path(path), "w", encoding="utf-8", newline="") as f:
            f.write(text)
    except OSError as e:
        error_msg = f"无法写入 {path}: {e}"
        logger.error(error_msg)
        raise OutputError(error_msg, path=str(path)) from e


def render_csv(rows: Sequence[SweepRow], spec: SweepSpec) -> str:
    """CSV 文本：表头一行，每个扫描点一行"""
    if not rows:
        raise ValidationError("没有可输出的结果行", field="rows")
    columns = spec.column_names()
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        record = row.to_record(spec)
        writer.writerow([format_value(record.get(column)) for column in columns])
    return buffer.getvalue()


def emit_csv(rows: Sequence[SweepRow], path: PathLike, spec: SweepSpec) -> None:
    """
    写出 CSV

    Args:
        rows: 扫描结果（非空）
        path: 目标路径，"-" 为标准输出
        spec: 扫描描述（决定列）

    Raises:
        OutputError: 写入失败
    """
    write_text(render_csv(rows, spec), path)
    logger.info(f"CSV 已写出: {path} ({len(rows)} 行)")


@dataclass(frozen=True)
class SvgStyle:
    """曲线图样式"""

    width_in: float = SweepConstants.SVG_WIDTH_IN
    height_in: float = SweepConstants.SVG_HEIGHT_IN
    colors: Sequence[str] = SweepConstants.SVG_COLORS
    title: Optional[str] = None


def collect_series(rows: Sequence[SweepRow]) -> Dict[str, List[float]]:
    """各方案的曲线值，缺失或不可行为 NaN（作图时断开）"""
    names: List[str] = []
    for row in rows:
        for name in row.series():
            if name not in names:
                names.append(name)
    series: Dict[str, List[float]] = {}
    for name in names:
        values = []
        for row in rows:
            value = row.series().get(name)
            values.append(math.nan if value is None else float(value))
        series[name] = values
    return series


def render_svg(rows: Sequence[SweepRow], spec: SweepSpec, style: Optional[SvgStyle] = None) -> str:
    """
    SVG 折线图：每个方案一条曲线（id 为 series-<名称>），带图例、坐标轴标签和数据点标记

    Args:
        rows: 扫描结果（非空）
        spec: 扫描描述
        style: 样式

    Returns:
        SVG 文本
    """
    if not rows:
        raise ValidationError("没有可作图的结果行", field="rows")
    style = style or SvgStyle()
    x = [row.axis_value for row in rows]
    series = collect_series(rows)

    # 文字保留为 <text>；固定散列盐保证输出可复现
    rc = {"svg.fonttype": "none", "svg.hashsalt": SweepConstants.SVG_HASH_SALT}
    with matplotlib.rc_context(rc):
        fig = Figure(figsize=(style.width_in, style.height_in), dpi=SweepConstants.SVG_DPI)
        ax = fig.subplots()
        for index, (name, values) in enumerate(series.items()):
            color = style.colors[index % len(style.colors)]
            (line,) = ax.plot(x, values, color=color, marker="o", markersize=3, label=name)
            line.set_gid(f"series-{name}")
        ax.set_xlabel(_AXIS_LABELS.get(spec.axis.value, spec.axis.value))
        ax.set_ylabel("rate (bits/complex dimension)")
        if style.title:
            ax.set_title(style.title)
        ax.grid(True, alpha=0.3)
        if series:
            ax.legend(loc="best")
        buffer = io.StringIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()


def emit_svg(rows: Sequence[SweepRow], path: PathLike, spec: SweepSpec,
             style: Optional[SvgStyle] = None) -> None:
    """
    写出 SVG 曲线图

    Raises:
        OutputError: 写入失败
    """
    write_text(render_svg(rows, spec, style), path)
    logger.info(f"SVG 已写出: {path}")
