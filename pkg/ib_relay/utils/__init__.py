# This Python file uses the following encoding: utf-8

"""
工具模块 - 日志、配置、异常与常量
"""

from .config import Config
from .logger import get_logger
from .exceptions import (
    IbRelayError, ConfigError, ValidationError, DomainError,
    QuadratureError, BracketingError, UnsupportedConfigurationError,
    InfeasibleBudgetError, DegenerateBudgetError, OracleError,
    EventHandlerError, OutputError
)

__all__ = [
    'Config', 'get_logger',
    'IbRelayError', 'ConfigError', 'ValidationError', 'DomainError',
    'QuadratureError', 'BracketingError', 'UnsupportedConfigurationError',
    'InfeasibleBudgetError', 'DegenerateBudgetError', 'OracleError',
    'EventHandlerError', 'OutputError'
]
