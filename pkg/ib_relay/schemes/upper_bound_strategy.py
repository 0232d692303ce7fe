"""
知情接收端上界策略
"""

from typing import Any, Dict
from ..bounds import upper_bound, ub_limits
from ..core import Scheme
from ..models import ChannelConfig
from .base_bound_strategy import BaseBoundStrategy


class UpperBoundStrategy(BaseBoundStrategy):
    """注水上界 R^ub"""

    scheme = Scheme.UB

    def _evaluate_impl(self, cfg: ChannelConfig) -> float:
        return upper_bound(cfg)

    def limits(self, cfg: ChannelConfig) -> Dict[str, Any]:
        return ub_limits(cfg).to_dict()
