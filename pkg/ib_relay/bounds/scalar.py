# This Python file uses the following encoding: utf-8

"""
标量高斯信息瓶颈速率
"""

import math
from ..utils.constants import UnitConstants
from ..utils.exceptions import ValidationError


def scalar_ib_rate(snr_eff: float, c_bits: float) -> float:
    """
    标量高斯信道的最优瓶颈速率 log2(1+ρ) - log2(1+ρ·2^{-c})

    Args:
        snr_eff: 等效信噪比 ρ ≥ 0
        c_bits: 压缩预算 c ≥ 0（可为无穷）

    Returns:
        速率（比特）
    """
    if not (snr_eff >= 0) or not (c_bits >= 0):
        raise ValidationError(f"参数必须非负: snr={snr_eff}, c={c_bits}", field="snr_eff")
    if snr_eff == 0.0 or c_bits == 0.0:
        return 0.0
    if math.isinf(snr_eff):
        return c_bits
    residual = snr_eff * 2.0 ** (-c_bits)
    rate = (math.log1p(snr_eff) - math.log1p(residual)) * UnitConstants.BITS_PER_NAT
    return max(rate, 0.0)
