"""
MMSE 估计压缩策略
"""

from typing import Any, Dict
from ..core import Scheme
from ..mmse import mmse_rate, mmse_limits
from ..models import ChannelConfig
from .base_bound_strategy import BaseBoundStrategy


class MmseStrategy(BaseBoundStrategy):
    """MMSE 下界 R^lb2，C = 0 时速率为 0"""

    scheme = Scheme.MMSE

    def _evaluate_impl(self, cfg: ChannelConfig) -> float:
        if cfg.capacity_bits == 0.0:
            return 0.0
        return mmse_rate(cfg)

    def limits(self, cfg: ChannelConfig) -> Dict[str, Any]:
        return mmse_limits(cfg).to_dict()
