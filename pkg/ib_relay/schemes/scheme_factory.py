"""
速率策略工厂
"""

from typing import Dict, List, Optional, Type
from ..core import Scheme
from ..utils.logger import get_logger
from ..utils.exceptions import ValidationError
from .base_bound_strategy import BaseBoundStrategy
from .upper_bound_strategy import UpperBoundStrategy

logger = get_logger(__name__)


class SchemeFactory:
    """速率策略工厂"""

    # 策略注册表 - 延迟加载
    _strategies: Optional[Dict[Scheme, Type[BaseBoundStrategy]]] = None

    @classmethod
    def _get_strategies(cls) -> Dict[Scheme, Type[BaseBoundStrategy]]:
        """
        获取策略注册表（延迟加载）

        Returns:
            Dict[Scheme, Type[BaseBoundStrategy]]: 策略注册表
        """
        if cls._strategies is None:
            from .qci_strategy import QciStrategy
            from .mmse_strategy import MmseStrategy

            cls._strategies = {
                Scheme.UB: UpperBoundStrategy,
                Scheme.QCI: QciStrategy,
                Scheme.MMSE: MmseStrategy,
            }
        return cls._strategies

    @classmethod
    def create(cls, scheme: Scheme, **options) -> BaseBoundStrategy:
        """
        创建策略实例

        Args:
            scheme: 方案
            options: 策略构造参数（如 QCI 的 bits）

        Returns:
            BaseBoundStrategy: 策略实例

        Raises:
            ValidationError: 未注册的方案
        """
        strategy_class = cls._get_strategies().get(scheme)
        if strategy_class is None:
            error_msg = f"不支持的方案: {scheme}"
            logger.error(error_msg)
            raise ValidationError(error_msg, field="scheme")
        return strategy_class(**options)

    @classmethod
    def create_all(cls, schemes, qci_bits=(4,)) -> List[BaseBoundStrategy]:
        """
        按扫描顺序创建策略：QCI 每个 B 一个实例

        Args:
            schemes: 方案序列
            qci_bits: QCI 反馈比特数序列

        Returns:
            List[BaseBoundStrategy]: 策略列表
        """
        strategies: List[BaseBoundStrategy] = []
        for scheme in schemes:
            if scheme is Scheme.QCI:
                strategies.extend(cls.create(scheme, bits=b) for b in qci_bits)
            else:
                strategies.append(cls.create(scheme))
        return strategies

    @classmethod
    def register_strategy(cls, scheme: Scheme, strategy_class: Type[BaseBoundStrategy]) -> None:
        """
        注册新的速率策略

        Args:
            scheme: 方案
            strategy_class: 策略类
        """
        strategies = cls._get_strategies()
        strategies[scheme] = strategy_class
        logger.info(f"注册速率策略: {scheme} -> {strategy_class.__name__}")

    @classmethod
    def get_supported_types(cls) -> list:
        """已注册的方案列表"""
        return list(cls._get_strategies().keys())

    @classmethod
    def is_supported_type(cls, scheme: Scheme) -> bool:
        """是否支持指定方案"""
        return scheme in cls._get_strategies()
