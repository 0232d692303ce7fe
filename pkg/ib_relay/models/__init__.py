"""
数据模型模块
"""

from .channel import ChannelDims, ChannelConfig
from .quant_grid import QuantGrid, QciAllocation, entropy_bits
from .results import WaterfillSolution, MmseParams, MmseRate, UbLimits, QciLimits, MmseLimits
from .sweep import SweepSpec, SweepRow

__all__ = [
    'ChannelDims', 'ChannelConfig',
    'QuantGrid', 'QciAllocation', 'entropy_bits',
    'WaterfillSolution', 'MmseParams', 'MmseRate', 'UbLimits', 'QciLimits', 'MmseLimits',
    'SweepSpec', 'SweepRow'
]
