# This Python file uses the following encoding: utf-8

"""
MMSE 估计下界 R^lb2

中继转发线性 MMSE 估计的压缩版本，不需要信道状态反馈，K 与 M 的大小关系任意。
"""

import math
from ..models.channel import ChannelConfig
from ..models.results import MmseParams, MmseRate, MmseLimits
from ..spectra.eig_density import EigDensity, eig_expectation
from ..utils.constants import UnitConstants
from ..utils.logger import get_logger
from ..utils.exceptions import DegenerateBudgetError

logger = get_logger(__name__)


def _log2_expm1_bits(x: float) -> float:
    """log2(2^x - 1)，x > 0，大 x 时不溢出"""
    return x + math.log1p(-2.0 ** (-x)) * UnitConstants.BITS_PER_NAT


def _ratio_expectation(cfg: ChannelConfig) -> float:
    sigma2 = cfg.sigma2
    return eig_expectation(EigDensity(cfg.dims), lambda lam: lam / (lam + sigma2), points=[sigma2])


def _complement_expectation(cfg: ChannelConfig) -> float:
    # E[σ²/(λ+σ²)] = 1 - E[λ/(λ+σ²)]，单独积分避免高信噪比下的相消
    sigma2 = cfg.sigma2
    return eig_expectation(EigDensity(cfg.dims), lambda lam: sigma2 / (lam + sigma2), points=[sigma2])


def _log_ratio_expectation(cfg: ChannelConfig, d_noise: float) -> float:
    sigma2 = cfg.sigma2

    def integrand(lam: float) -> float:
        value = lam / (lam + sigma2) + d_noise
        if value <= 0.0:
            return 0.0
        return math.log2(value)

    return eig_expectation(EigDensity(cfg.dims), integrand, points=[sigma2])


def mmse_params(cfg: ChannelConfig) -> MmseParams:
    """
    计算 e_ratio = E[λ/(λ+σ²)] 与表示噪声 D = (T/K)·e_ratio/(2^{C/K} - 1)

    Args:
        cfg: 信道配置

    Returns:
        MMSE 参数

    Raises:
        DegenerateBudgetError: C = 0
    """
    if cfg.capacity_bits == 0.0:
        error_msg = f"瓶颈容量为 0 时表示噪声 D 无定义: {cfg}"
        logger.error(error_msg)
        raise DegenerateBudgetError(error_msg, quantity="d_noise")
    k, t = cfg.dims.k, cfg.dims.t
    e_ratio = _ratio_expectation(cfg)
    log2_d = math.log2(t / k * e_ratio) - _log2_expm1_bits(cfg.capacity_bits / k)
    return MmseParams(e_ratio=e_ratio, d_noise=2.0 ** log2_d, log2_d_noise=log2_d)


def _signal_variance(cfg: ChannelConfig, e_ratio: float) -> float:
    """(T/K)e - (T/K)²e²，T = K 时用互补期望计算 e(1-e)"""
    k, t = cfg.dims.k, cfg.dims.t
    scaled = t / k * e_ratio
    if t == k:
        return scaled * _complement_expectation(cfg)
    return scaled * (1.0 - scaled)


def mmse_rate_detail(cfg: ChannelConfig) -> MmseRate:
    """
    R^lb2 = T·E[log2(λ/(λ+σ²) + D)] + (K-T)·log2 D - K·log2{(T/K)e - (T/K)²e² + D}

    结果为负时截断为 0 并记录警告。
    """
    params = mmse_params(cfg)
    k, t = cfg.dims.k, cfg.dims.t
    rate = t * _log_ratio_expectation(cfg, params.d_noise)
    if k > t:
        rate += (k - t) * params.log2_d_noise
    rate -= k * math.log2(_signal_variance(cfg, params.e_ratio) + params.d_noise)
    if rate < 0.0:
        logger.warning(f"MMSE 下界为负 ({rate:.6g})，截断为 0: {cfg}")
        return MmseRate(rate_bits=0.0, raw_bits=rate, clamped=True)
    return MmseRate(rate_bits=rate, raw_bits=rate, clamped=False)


def mmse_rate(cfg: ChannelConfig) -> float:
    """MMSE 下界（比特/复维度），负值截断为 0"""
    return mmse_rate_detail(cfg).rate_bits


def mmse_limits(cfg: ChannelConfig) -> MmseLimits:
    """
    MMSE 下界的渐近值

    大 M（K ≤ M 时还包括大信噪比）趋于 C；C → ∞ 时趋于
    K·E[log2(λ/(λ+σ²))] - K·log2{e - e²}。K > M 时 (K-T)·log2 D → -∞，
    下界在大 C 下截断为 0。
    """
    k, t = cfg.dims.k, cfg.dims.t
    if k > t:
        logger.info(f"K > M 时大 C 极限为 0: {cfg}")
        return MmseLimits(limit_large_M_or_snr=cfg.capacity_bits, limit_large_C=0.0)
    e_ratio = _ratio_expectation(cfg)
    limit = k * _log_ratio_expectation(cfg, 0.0)
    limit -= k * math.log2(_signal_variance(cfg, e_ratio))
    return MmseLimits(limit_large_M_or_snr=cfg.capacity_bits, limit_large_C=limit)
