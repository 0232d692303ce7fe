# This Python file uses the following encoding: utf-8

"""
信道模型 - 天线维度与信道配置
"""

import math
from dataclasses import dataclass, replace
from typing import Dict, Any
from ..utils.exceptions import ValidationError


@dataclass(frozen=True)
class ChannelDims:
    """
    天线维度

    K 为发射维度，M 为中继天线数；T = min(K, M)，S = max(K, M)。
    """

    k: int
    m: int

    def __post_init__(self):
        for name, value in (("k", self.k), ("m", self.m)):
            if isinstance(value, bool) or int(value) != value or value < 1:
                raise ValidationError(f"天线数必须为正整数: {name}={value}", field=name)
        object.__setattr__(self, "k", int(self.k))
        object.__setattr__(self, "m", int(self.m))

    @property
    def t(self) -> int:
        return min(self.k, self.m)

    @property
    def s(self) -> int:
        return max(self.k, self.m)

    def to_dict(self) -> Dict[str, Any]:
        return {"k": self.k, "m": self.m, "t": self.t, "s": self.s}

    def __str__(self) -> str:
        return f"K={self.k}, M={self.m}"


@dataclass(frozen=True)
class ChannelConfig:
    """
    信道配置：维度、噪声功率 σ² 与瓶颈容量 C（比特/复维度）
    """

    dims: ChannelDims
    sigma2: float
    capacity_bits: float

    def __post_init__(self):
        if not (self.sigma2 > 0) or math.isinf(self.sigma2):
            raise ValidationError(f"噪声功率必须为有限正数: {self.sigma2}", field="sigma2")
        if not (self.capacity_bits >= 0) or math.isinf(self.capacity_bits):
            raise ValidationError(f"瓶颈容量必须为有限非负数: {self.capacity_bits}",
                                  field="capacity_bits")

    @classmethod
    def from_snr_db(cls, k: int, m: int, snr_db: float, capacity_bits: float) -> 'ChannelConfig':
        """
        按 dB 信噪比构造配置

        Args:
            k: 发射维度
            m: 中继天线数
            snr_db: 信噪比 ρ (dB)，ρ = 1/σ²
            capacity_bits: 瓶颈容量 C

        Returns:
            信道配置
        """
        return cls(ChannelDims(k, m), 10.0 ** (-snr_db / 10.0), capacity_bits)

    @property
    def snr(self) -> float:
        """线性信噪比 ρ = 1/σ²"""
        return 1.0 / self.sigma2

    @property
    def snr_db(self) -> float:
        return 10.0 * math.log10(self.snr)

    def with_capacity(self, capacity_bits: float) -> 'ChannelConfig':
        return replace(self, capacity_bits=capacity_bits)

    def with_snr_db(self, snr_db: float) -> 'ChannelConfig':
        return replace(self, sigma2=10.0 ** (-snr_db / 10.0))

    def with_antennas(self, m: int) -> 'ChannelConfig':
        return replace(self, dims=ChannelDims(self.dims.k, m))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "k": self.dims.k,
            "m": self.dims.m,
            "sigma2": self.sigma2,
            "snr_db": self.snr_db,
            "capacity_bits": self.capacity_bits
        }

    def __str__(self) -> str:
        return f"{self.dims}, ρ={self.snr_db:.2f}dB, C={self.capacity_bits:g}"
