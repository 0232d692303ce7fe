"""
速率方案模块 - 策略与工厂
"""

from .base_bound_strategy import BaseBoundStrategy
from .upper_bound_strategy import UpperBoundStrategy
from .qci_strategy import QciStrategy
from .mmse_strategy import MmseStrategy
from .scheme_factory import SchemeFactory

__all__ = ['BaseBoundStrategy', 'UpperBoundStrategy', 'QciStrategy', 'MmseStrategy', 'SchemeFactory']
