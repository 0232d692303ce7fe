"""
MMSE 模块 - MMSE 估计下界
"""

from .estimate import mmse_params, mmse_rate, mmse_rate_detail, mmse_limits

__all__ = ['mmse_params', 'mmse_rate', 'mmse_rate_detail', 'mmse_limits']
