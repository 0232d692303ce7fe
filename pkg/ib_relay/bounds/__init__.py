"""
上界模块 - 标量瓶颈速率、注水上界、信道容量与渐近值
"""

from .scalar import scalar_ib_rate
from .water_filling import spent_budget, solve_water_level, upper_bound, capacity, ub_limits

__all__ = [
    'scalar_ib_rate', 'spent_budget', 'solve_water_level', 'upper_bound', 'capacity', 'ub_limits'
]
