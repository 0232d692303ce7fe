# This Python file uses the following encoding: utf-8

"""
知情接收端上界 - 特征值域注水

压缩预算按 c(λ) = [log2(ρλ/ν)]^+ 分配到各特征子信道，水位 ν 由
T ∫_{ν/ρ}^∞ log2(ρλ/ν) f(λ) dλ = C 确定。求解在 t = log2 ν 上进行，
ν 在扫描中跨越数百个数量级。
"""

import math
from typing import Optional
from ..mathcore.quadrature import QuadratureRule
from ..mathcore.roots import bisect_monotone, widen_bracket
from ..models.channel import ChannelConfig
from ..models.results import WaterfillSolution, UbLimits
from ..spectra.eig_density import EigDensity, eig_expectation
from ..utils.constants import UnitConstants, NumericConstants
from ..utils.logger import get_logger

logger = get_logger(__name__)


def _threshold(log2_nu: float, snr: float) -> float:
    """门限 ν/ρ，下溢时为 0"""
    try:
        return 2.0 ** log2_nu / snr
    except OverflowError:
        return math.inf


def spent_budget(cfg: ChannelConfig, log2_nu: float,
                 rule: Optional[QuadratureRule] = None) -> float:
    """
    给定水位消耗的压缩预算 T ∫_{ν/ρ}^∞ (log2(ρλ) - log2 ν) f(λ) dλ

    Args:
        cfg: 信道配置
        log2_nu: 水位的 log2
        rule: 积分规则

    Returns:
        预算（比特）
    """
    d = EigDensity(cfg.dims)
    snr = cfg.snr
    threshold = _threshold(log2_nu, snr)
    if math.isinf(threshold):
        return 0.0

    def allocation(lam: float) -> float:
        if lam <= threshold or lam <= 0.0:
            return 0.0
        return max(math.log2(snr * lam) - log2_nu, 0.0)

    return cfg.dims.t * eig_expectation(d, allocation, rule, points=[threshold], lower=threshold)


def solve_water_level(cfg: ChannelConfig, rule: Optional[QuadratureRule] = None) -> WaterfillSolution:
    """
    求解上界的水位与速率

    Args:
        cfg: 信道配置
        rule: 积分规则，缺省按配置

    Returns:
        注水解；C = 0 时返回退化解
    """
    capacity_bits = cfg.capacity_bits
    if capacity_bits == 0.0:
        logger.debug(f"瓶颈容量为 0，返回退化解: {cfg}")
        return WaterfillSolution(None, 0.0, 0.0, degenerate=True)

    t, s = cfg.dims.t, cfg.dims.s
    log2_snr = math.log2(cfg.snr)

    def residual(log2_nu: float) -> float:
        return spent_budget(cfg, log2_nu, rule) - capacity_bits

    lo = log2_snr - 2.0 * capacity_bits / t - 10.0
    hi = log2_snr + math.log2(s) + 10.0
    lo, hi = widen_bracket(residual, lo, hi)
    log2_nu = bisect_monotone(residual, lo, hi)

    spent = spent_budget(cfg, log2_nu, rule)
    if abs(spent - capacity_bits) > NumericConstants.WATER_LEVEL_RESIDUAL:
        logger.warning(f"水位残差偏大: {spent - capacity_bits:.3e} ({cfg})")

    threshold = _threshold(log2_nu, cfg.snr)
    snr = cfg.snr
    try:
        log_one_plus_nu = math.log1p(2.0 ** log2_nu)
    except OverflowError:
        log_one_plus_nu = log2_nu * UnitConstants.LN2

    def gain(lam: float) -> float:
        if lam <= threshold:
            return 0.0
        return max(math.log1p(snr * lam) - log_one_plus_nu, 0.0) * UnitConstants.BITS_PER_NAT

    rate = t * eig_expectation(EigDensity(cfg.dims), gain, rule, points=[threshold], lower=threshold)
    logger.debug(f"注水解 {cfg}: log2ν={log2_nu:.6f}, R={rate:.6f}")
    return WaterfillSolution(log2_nu, rate, spent)


def upper_bound(cfg: ChannelConfig, rule: Optional[QuadratureRule] = None) -> float:
    """
    知情接收端上界 R^ub

    Args:
        cfg: 信道配置
        rule: 积分规则

    Returns:
        速率（比特/复维度）
    """
    return solve_water_level(cfg, rule).rate_bits


def capacity(cfg: ChannelConfig, rule: Optional[QuadratureRule] = None) -> float:
    """遍历容量 T·E[log2(1+ρλ)]"""
    snr = cfg.snr

    def integrand(lam: float) -> float:
        return math.log1p(snr * lam) * UnitConstants.BITS_PER_NAT

    return cfg.dims.t * eig_expectation(EigDensity(cfg.dims), integrand, rule, points=[1.0 / snr])


def ub_limits(cfg: ChannelConfig) -> UbLimits:
    """上界的三个渐近值：大 M 与大信噪比趋于 C，大 C 趋于信道容量"""
    return UbLimits(
        limit_large_M=cfg.capacity_bits,
        limit_large_snr=cfg.capacity_bits,
        limit_large_C=capacity(cfg)
    )
