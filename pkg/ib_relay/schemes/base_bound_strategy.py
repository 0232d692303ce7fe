"""
基础速率策略 - 各方案统一的求值接口
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, Optional
from ..core import Scheme
from ..models import ChannelConfig
from ..utils.logger import get_logger
from ..utils.exceptions import InfeasibleBudgetError

logger = get_logger(__name__)


class BaseBoundStrategy(ABC):
    """基础速率策略"""

    scheme: Scheme

    @property
    def label(self) -> str:
        """曲线与列名使用的名称"""
        return self.scheme.value

    def evaluate(self, cfg: ChannelConfig) -> Optional[float]:
        """
        计算速率

        Args:
            cfg: 信道配置

        Returns:
            Optional[float]: 速率（比特/复维度）；预算不足以支付反馈时为 None
        """
        try:
            return self._evaluate_impl(cfg)
        except InfeasibleBudgetError as e:
            logger.debug(f"{self.label} 在 {cfg} 处不可行: {e}")
            return None

    @abstractmethod
    def _evaluate_impl(self, cfg: ChannelConfig) -> float:
        """
        速率的具体实现

        Args:
            cfg: 信道配置

        Returns:
            float: 速率
        """

    @abstractmethod
    def limits(self, cfg: ChannelConfig) -> Dict[str, Any]:
        """
        渐近值

        Args:
            cfg: 信道配置

        Returns:
            Dict[str, Any]: 极限名称到数值
        """

    def check_supported(self, cfg: ChannelConfig) -> None:
        """配置不受支持时抛出异常，默认全部支持"""
