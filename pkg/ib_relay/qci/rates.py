# This Python file uses the following encoding: utf-8

"""
QCI 下界速率与极限
"""

import math
from typing import Optional
from ..bounds.scalar import scalar_ib_rate
from ..models.channel import ChannelConfig
from ..models.quant_grid import QuantGrid, QciAllocation
from ..models.results import QciLimits
from ..spectra.noise_level import NoiseLevelDensity, noise_level_expectation
from ..utils.logger import get_logger
from ..utils.exceptions import InfeasibleBudgetError, ValidationError
from .grid import quantile_grid
from .waterfill import qci_waterfill

logger = get_logger(__name__)


def qci_rate(grid: QuantGrid, alloc: QciAllocation, k: int) -> float:
    """
    R^lb1 = Σ K·P_j·[log2(1+ρ_j) - log2(1+ρ_j·2^{-c_j})]

    Args:
        grid: 量化网格
        alloc: 每级比特分配
        k: 发射维度 K

    Returns:
        速率（比特/复维度）
    """
    if len(alloc.c) != grid.levels:
        raise ValidationError("分配与网格电平数不一致", field="alloc")
    terms = [k * p * scalar_ib_rate(rho, c)
             for p, rho, c in zip(grid.pmf, alloc.level_snrs, alloc.c) if p > 0.0]
    return math.fsum(terms)


def _density_for(cfg: ChannelConfig, d: Optional[NoiseLevelDensity]) -> NoiseLevelDensity:
    if d is None:
        return NoiseLevelDensity(cfg.dims, cfg.sigma2)
    if d.dims != cfg.dims or d.sigma2 != cfg.sigma2:
        raise ValidationError("噪声电平密度与信道配置不一致", field="d")
    return d


def qci_quantile_rate(cfg: ChannelConfig, j_levels: int,
                      d: Optional[NoiseLevelDensity] = None) -> float:
    """
    分位数网格下的 QCI 速率

    Args:
        cfg: 信道配置（K ≤ M）
        j_levels: 电平数 J = 2^B
        d: 噪声电平密度，缺省按配置的自由度约定

    Returns:
        速率（比特/复维度）

    Raises:
        InfeasibleBudgetError: B ≥ C/K
    """
    d = _density_for(cfg, d)
    k = cfg.dims.k
    feedback = k * math.log2(j_levels)
    if cfg.capacity_bits <= feedback:
        error_msg = f"QCI 不可行: B = log2 {j_levels} ≥ C/K = {cfg.capacity_bits / k:g}"
        logger.debug(error_msg)
        raise InfeasibleBudgetError(error_msg, budget_bits=cfg.capacity_bits, feedback_bits=feedback)
    grid = quantile_grid(d, j_levels)
    alloc = qci_waterfill(grid, k, cfg.capacity_bits)
    return qci_rate(grid, alloc, k)


def qci_limit_rate(cfg: ChannelConfig, d: Optional[NoiseLevelDensity] = None) -> float:
    """C → ∞ 时的极限 K·E[log2(1 + 1/a)]"""
    d = _density_for(cfg, d)
    return cfg.dims.k * noise_level_expectation(d, lambda a: math.log2(1.0 + 1.0 / a))


def qci_limits(cfg: ChannelConfig, d: Optional[NoiseLevelDensity] = None) -> QciLimits:
    """大 M / 大信噪比极限为 C；大 C 极限见 qci_limit_rate"""
    return QciLimits(limit_large_M_or_snr=cfg.capacity_bits,
                     limit_large_C=qci_limit_rate(cfg, d))
