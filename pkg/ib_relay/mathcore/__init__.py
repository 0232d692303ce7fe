"""
数学核心模块 - 特殊函数、数值积分与单调求根
"""

from .special import laguerre, laguerre_table, log_gamma
from .quadrature import (
    QuadratureRule, gauss_laguerre_rule, default_rule, integrate, log_split, ADAPTIVE_RULE
)
from .roots import bisect_monotone, widen_bracket

__all__ = [
    'laguerre', 'laguerre_table', 'log_gamma',
    'QuadratureRule', 'gauss_laguerre_rule', 'default_rule', 'integrate', 'log_split', 'ADAPTIVE_RULE',
    'bisect_monotone', 'widen_bracket'
]
