# This Python file uses the following encoding: utf-8

"""
量化网格构造 - 任意网格的概率分布、分位数网格与大 M 双电平网格
"""

from functools import lru_cache
from typing import Optional, Sequence
from ..core.enums import DofConvention
from ..models.channel import ChannelDims
from ..models.quant_grid import QuantGrid
from ..spectra.noise_level import NoiseLevelDensity, level_masses, noise_level_quantiles
from ..utils.config import Config
from ..utils.exceptions import ValidationError


def grid_pmf(points: Sequence[float], d: NoiseLevelDensity) -> QuantGrid:
    """
    由量化点计算各电平概率 P_j = Pr{b_{j-1} < a ≤ b_j}

    Args:
        points: 有限量化点 b_1 ≤ … ≤ b_{J-1}（可为空，即 J = 1）
        d: 噪声电平密度

    Returns:
        量化网格（含熵）
    """
    points = [float(b) for b in points]
    if any(b <= 0 for b in points):
        raise ValidationError("量化点必须为正", field="points")
    if any(b2 < b1 for b1, b2 in zip(points, points[1:])):
        raise ValidationError("量化点必须非递减", field="points")
    return QuantGrid.from_pmf(points, level_masses(d, points))


@lru_cache(maxsize=256)
def quantile_grid(d: NoiseLevelDensity, j_levels: int) -> QuantGrid:
    """等概率网格（缓存，扫描中同一密度会被多次使用）"""
    return noise_level_quantiles(d, j_levels)


def lemma_grid(dims: ChannelDims, sigma2: float, epsilon: Optional[float] = None,
               dof_convention: Optional[DofConvention] = None) -> QuantGrid:
    """
    大 M 构造的双电平网格 b_1 = σ²/M·(1+ε)

    a 随 M 增大集中到 σ²/M 附近，第一电平的概率趋于 1。

    Args:
        dims: 天线维度（K ≤ M）
        sigma2: 噪声功率
        epsilon: 相对余量，缺省取配置值
        dof_convention: 自由度约定

    Returns:
        J = 2 的量化网格
    """
    if epsilon is None:
        epsilon = Config().get_lemma_grid_epsilon()
    if not (epsilon > 0):
        raise ValidationError(f"ε 必须为正: {epsilon}", field="epsilon")
    d = NoiseLevelDensity(dims, sigma2, dof_convention)
    return grid_pmf([sigma2 / dims.m * (1.0 + epsilon)], d)
