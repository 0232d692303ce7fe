"""
量化信道求逆策略 - 分位数网格，J = 2^B
"""

from typing import Any, Dict
from ..core import Scheme
from ..models import ChannelConfig
from ..qci import qci_quantile_rate, qci_limits
from ..utils.exceptions import UnsupportedConfigurationError, ValidationError
from .base_bound_strategy import BaseBoundStrategy


class QciStrategy(BaseBoundStrategy):
    """QCI 下界 R^lb1"""

    scheme = Scheme.QCI

    def __init__(self, bits: int = 4):
        """
        Args:
            bits: 每个子信道的反馈比特数 B
        """
        if int(bits) != bits or bits < 1:
            raise ValidationError(f"反馈比特数必须为正整数: {bits}", field="bits")
        self.bits = int(bits)

    @property
    def label(self) -> str:
        return f"qci-B{self.bits}"

    @property
    def levels(self) -> int:
        return 2 ** self.bits

    def check_supported(self, cfg: ChannelConfig) -> None:
        if cfg.dims.k > cfg.dims.m:
            raise UnsupportedConfigurationError(f"QCI 要求 K ≤ M: {cfg.dims}", dims=cfg.dims)

    def _evaluate_impl(self, cfg: ChannelConfig) -> float:
        return qci_quantile_rate(cfg, self.levels)

    def limits(self, cfg: ChannelConfig) -> Dict[str, Any]:
        return qci_limits(cfg).to_dict()
