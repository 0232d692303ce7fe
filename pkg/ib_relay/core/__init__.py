"""
核心模块 - 枚举类型
"""

from .enums import QuadratureKind, DofConvention, SweepAxis, Scheme, OracleLevel

__all__ = ['QuadratureKind', 'DofConvention', 'SweepAxis', 'Scheme', 'OracleLevel']
