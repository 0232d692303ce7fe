# This Python file uses the following encoding: utf-8

"""
量化后子信道的高斯替代表示 z = φ·x̂ + n'

x̂ 的方差为 1 + b，n' 为单位方差噪声；φ 使 I(x̂; z) 恰为该子信道的比特预算。
"""

import math
from ..utils.constants import UnitConstants
from ..utils.exceptions import DomainError


def repr_fading(level: float, rate_bits: float) -> float:
    """
    表示衰落系数 φ = sqrt((1/b + 2^c)/(1+b) - 1/b) = sqrt((2^c - 1)/(1+b))

    Args:
        level: 量化后的噪声电平 b > 0
        rate_bits: 子信道预算 c（比特）

    Returns:
        φ ≥ 0

    Raises:
        DomainError: b ≤ 0 或根号内为负
    """
    if not (level > 0):
        raise DomainError(f"噪声电平必须为正: {level}", argument=level)
    if math.isnan(rate_bits) or rate_bits < 0:
        raise DomainError(f"根号内为负: c={rate_bits}", argument=rate_bits)
    if math.isinf(level):
        return 0.0
    return math.sqrt(math.expm1(rate_bits * UnitConstants.LN2) / (1.0 + level))


def surrogate_compression_rate(level: float, rate_bits: float) -> float:
    """高斯替代表示的压缩速率 log2(1 + φ²(1+b))，应等于 c"""
    phi = repr_fading(level, rate_bits)
    return math.log1p(phi * phi * (1.0 + level)) * UnitConstants.BITS_PER_NAT
