# This Python file uses the following encoding: utf-8

"""
计算结果数据结构 - 注水解、MMSE 参数与各类极限
"""

from dataclasses import dataclass, asdict
from typing import Dict, Any, Optional


@dataclass(frozen=True)
class WaterfillSolution:
    """
    上界注水解

    水位以 log2 形式求解；C = 0 时为退化解（degenerate=True，nu 为 None，速率为 0）。
    """

    log2_nu: Optional[float]
    rate_bits: float
    spent_bits: float
    degenerate: bool = False

    @property
    def nu(self) -> Optional[float]:
        if self.log2_nu is None:
            return None
        return 2.0 ** self.log2_nu

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["nu"] = self.nu
        return data


@dataclass(frozen=True)
class MmseParams:
    """MMSE 方案参数：e_ratio = E[λ/(λ+σ²)]，d_noise 为表示噪声功率 D（大 C 时可下溢，log2_d_noise 保持有限）"""

    e_ratio: float
    d_noise: float
    log2_d_noise: float

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class MmseRate:
    """MMSE 下界；闭式结果为负时截断为 0 并置 clamped 标志"""

    rate_bits: float
    raw_bits: float
    clamped: bool

    def __float__(self) -> float:
        return self.rate_bits


@dataclass(frozen=True)
class UbLimits:
    limit_large_M: float
    limit_large_snr: float
    limit_large_C: float

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class QciLimits:
    limit_large_M_or_snr: float
    limit_large_C: float

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class MmseLimits:
    """K > M 时大信噪比极限不成立，仅大 M 极限为 C"""

    limit_large_M_or_snr: float
    limit_large_C: float

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)
