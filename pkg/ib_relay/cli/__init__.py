"""
命令行与实验工具 - 参数扫描、预置扫描与结果输出
"""

from .sweep import run_sweep
from .presets import axis_values, figure_spec
from .emitters import SvgStyle, emit_csv, emit_svg, render_csv, render_svg, format_value

__all__ = [
    'run_sweep', 'axis_values', 'figure_spec',
    'SvgStyle', 'emit_csv', 'emit_svg', 'render_csv', 'render_svg', 'format_value'
]
