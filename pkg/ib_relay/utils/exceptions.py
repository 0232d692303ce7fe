"""
异常处理模块 - 定义项目中的自定义异常
"""

from typing import Any, Optional, Sequence


class IbRelayError(Exception):
    """信息瓶颈中继计算基础异常"""

    def __init__(self, message: str, error_code: str = None):
        super().__init__(message)
        self.message = message
        self.error_code = error_code

    def __str__(self) -> str:
        if self.error_code:
            return f"[{self.error_code}] {self.message}"
        return self.message


class ConfigError(IbRelayError):
    """配置异常"""

    def __init__(self, message: str, config_key: str = None):
        super().__init__(message, "CONFIG_ERROR")
        self.config_key = config_key


class ValidationError(IbRelayError):
    """参数验证异常"""

    def __init__(self, message: str, field: str = None):
        super().__init__(message, "VALIDATION_ERROR")
        self.field = field


class DomainError(IbRelayError):
    """自变量超出函数定义域"""

    def __init__(self, message: str, argument: Any = None):
        super().__init__(message, "DOMAIN_ERROR")
        self.argument = argument


class QuadratureError(IbRelayError):
    """数值积分不收敛，携带最后两次估计值"""

    def __init__(self, message: str, estimates: Sequence[float] = ()):
        super().__init__(message, "QUADRATURE_ERROR")
        self.estimates = tuple(estimates)


class BracketingError(IbRelayError):
    """求根区间两端没有变号"""

    def __init__(self, message: str, lo: float = None, hi: float = None):
        super().__init__(message, "BRACKETING_ERROR")
        self.lo = lo
        self.hi = hi


class UnsupportedConfigurationError(IbRelayError):
    """方案不支持当前天线配置（例如 K > M 时的伪逆）"""

    def __init__(self, message: str, dims: Any = None):
        super().__init__(message, "UNSUPPORTED_CONFIGURATION")
        self.dims = dims


class InfeasibleBudgetError(IbRelayError):
    """瓶颈预算不足以支付信道状态反馈"""

    def __init__(self, message: str, budget_bits: float = None, feedback_bits: float = None):
        super().__init__(message, "INFEASIBLE_BUDGET")
        self.budget_bits = budget_bits
        self.feedback_bits = feedback_bits


class DegenerateBudgetError(IbRelayError):
    """瓶颈容量为零时量无定义"""

    def __init__(self, message: str, quantity: str = None):
        super().__init__(message, "DEGENERATE_BUDGET")
        self.quantity = quantity


class OracleError(IbRelayError):
    """蒙特卡洛校验异常"""

    def __init__(self, message: str, check: str = None):
        super().__init__(message, "ORACLE_ERROR")
        self.check = check


class EventHandlerError(IbRelayError):
    """事件处理异常"""

    def __init__(self, message: str, event_type: str = None):
        super().__init__(message, "EVENT_HANDLER_ERROR")
        self.event_type = event_type


class OutputError(IbRelayError):
    """结果文件写出异常"""

    def __init__(self, message: str, path: Optional[str] = None):
        super().__init__(message, "OUTPUT_ERROR")
        self.path = path
