# This Python file uses the following encoding: utf-8

"""
蒙特卡洛校验 - 信道统计、特征值密度、噪声电平、信道容量与注水上界
"""

import math
from typing import Dict, List, Tuple
import numpy as np
from ..core.enums import DofConvention
from ..mathcore.roots import bisect_monotone, widen_bracket
from ..models.channel import ChannelConfig, ChannelDims
from ..spectra.eig_density import EigDensity, eig_cdf
from ..spectra.noise_level import NoiseLevelDensity, noise_level_cdf
from ..bounds.water_filling import capacity, upper_bound
from ..mmse.estimate import mmse_params
from ..utils.constants import UnitConstants
from ..utils.logger import get_logger
from ..utils.exceptions import UnsupportedConfigurationError, ValidationError
from .histograms import EmpiricalHistogram, equal_mass_histogram, compare_histogram
from .reports import CheckReport
from .sampling import (
    sample_channels, pooled_eigenvalues, well_conditioned_channels, check_resample_budget
)
from .streams import map_chunks, mean_and_stderr

logger = get_logger(__name__)

# 每个校验项的随机流命名空间
NS_CHANNEL = 1
NS_EIG = 2
NS_NOISE = 3
NS_CAPACITY = 4
NS_UPPER_BOUND = 5
NS_COVARIANCE = 6
NS_QCI_CHAIN = 7
NS_MATRIX = 8
NS_MMSE = 9


def _require_samples(n: int, minimum: int = 1):
    if n < minimum:
        raise ValidationError(f"样本数至少为 {minimum}: {n}", field="n")


def _within(value: float, target: float, relative: float, stderr: float, sigmas: float = 4.0) -> bool:
    """相对误差或统计误差两者满足其一"""
    gap = abs(value - target)
    return gap <= relative * abs(target) or gap <= sigmas * stderr


def check_channel_statistics(dims: ChannelDims, n: int, seed: int = 0) -> CheckReport:
    """
    信道元素的一、二阶统计与 E tr(HHᴴ) = MK

    Args:
        dims: 天线维度
        n: 样本数
        seed: 根种子

    Returns:
        校验报告
    """
    _require_samples(n)

    def task(rng, count):
        h = sample_channels(dims, rng, count)
        entries = h.reshape(count, -1)
        return entries.mean(axis=1), (np.abs(entries) ** 2).mean(axis=1), np.sum(np.abs(entries) ** 2, axis=1)

    chunks = map_chunks(task, n, seed, NS_CHANNEL)
    mean_re, se_re = mean_and_stderr([c[0].real for c in chunks])
    mean_im, se_im = mean_and_stderr([c[0].imag for c in chunks])
    power, se_power = mean_and_stderr([c[1] for c in chunks])
    trace, se_trace = mean_and_stderr([c[2] for c in chunks])

    report = CheckReport("channel_statistics", n_samples=n)
    report.metrics.update({"mean_real": mean_re, "mean_imag": mean_im,
                           "mean_power": power, "mean_trace": trace})
    report.expect(abs(mean_re) <= 3 * se_re + 1e-15, f"实部均值偏离 0: {mean_re:.3g}")
    report.expect(abs(mean_im) <= 3 * se_im + 1e-15, f"虚部均值偏离 0: {mean_im:.3g}")
    report.expect(abs(power - 1.0) <= 3 * se_power, f"元素功率偏离 1: {power:.6g}")
    report.expect(abs(trace - dims.m * dims.k) <= 3 * se_trace,
                  f"E tr(HHᴴ) 偏离 MK={dims.m * dims.k}: {trace:.6g}")
    return report


def empirical_eigenvalues(dims: ChannelDims, n: int, seed: int = 0) -> np.ndarray:
    """n 个样本的 T 个无序特征值（按分块顺序拼接）"""
    _require_samples(n)
    chunks = map_chunks(lambda rng, count: pooled_eigenvalues(sample_channels(dims, rng, count)),
                        n, seed, NS_EIG)
    return np.concatenate(chunks)


def empirical_eig_check(dims: ChannelDims, n: int, seed: int = 0) -> CheckReport:
    """
    特征值直方图与闭式密度对比，并校验均值为 S

    Args:
        dims: 天线维度
        n: 样本数（≥ 10⁴）
        seed: 根种子

    Returns:
        校验报告
    """
    _require_samples(n, 10_000)
    values = empirical_eigenvalues(dims, n, seed)
    density = EigDensity(dims)
    hist = equal_mass_histogram(values)
    comparison = compare_histogram(hist, lambda x: eig_cdf(density, x))
    mean, stderr = mean_and_stderr([values])

    report = CheckReport(f"eig_density[K={dims.k},M={dims.m}]", n_samples=n)
    report.metrics.update({
        "bins": hist.bins, "worst_bin_relative": comparison.worst_relative,
        "worst_bin_sigma": comparison.worst_sigma, "chi2": comparison.chi2_statistic,
        "p_value": comparison.p_value, "mean": mean, "expected_mean": float(dims.s)
    })
    report.expect(not comparison.failed_bins, f"分箱偏差超限: {comparison.failed_bins}")
    report.expect(comparison.p_value >= 1e-4, f"卡方检验 p 值过小: {comparison.p_value:.3g}")
    report.expect(_within(mean, dims.s, 0.01, stderr), f"特征值均值偏离 S={dims.s}: {mean:.6g}")
    return report


def _noise_level_samples(dims: ChannelDims, sigma2: float, n: int, seed: int) -> Tuple[np.ndarray, int]:
    if dims.k > dims.m:
        raise UnsupportedConfigurationError(f"噪声电平要求 K ≤ M: {dims}", dims=dims)

    def task(rng, count):
        h, resampled = well_conditioned_channels(dims, rng, count)
        inverse = np.linalg.inv(np.conj(np.swapaxes(h, -1, -2)) @ h)
        return sigma2 * np.real(np.diagonal(inverse, axis1=-2, axis2=-1)).reshape(-1), resampled

    chunks = map_chunks(task, n, seed, NS_NOISE)
    resampled = sum(c[1] for c in chunks)
    check_resample_budget(resampled, n, "noise_levels")
    return np.concatenate([c[0] for c in chunks]), resampled


def empirical_noise_levels(dims: ChannelDims, sigma2: float, n: int, seed: int = 0) -> EmpiricalHistogram:
    """
    σ²(HᴴH)⁻¹ 对角元的经验直方图（K 个对角元合并）

    Args:
        dims: 天线维度（K ≤ M）
        sigma2: 噪声功率
        n: 样本数
        seed: 根种子

    Returns:
        等概率分箱直方图
    """
    _require_samples(n)
    samples, _ = _noise_level_samples(dims, sigma2, n, seed)
    return equal_mass_histogram(samples)


def check_noise_levels(dims: ChannelDims, sigma2: float, n: int, seed: int = 0) -> CheckReport:
    """
    用两种自由度约定分别检验噪声电平直方图，恰好一种应通过

    报告的 fitted_convention 为通过的约定。
    """
    _require_samples(n, 10_000)
    samples, resampled = _noise_level_samples(dims, sigma2, n, seed)
    hist = equal_mass_histogram(samples)
    mean_inverse, stderr_inverse = mean_and_stderr([1.0 / samples])

    report = CheckReport(f"noise_levels[K={dims.k},M={dims.m}]", n_samples=n, resampled=resampled)
    passing: List[DofConvention] = []
    for convention in DofConvention:
        density = NoiseLevelDensity(dims, sigma2, convention)
        comparison = compare_histogram(hist, lambda a: noise_level_cdf(density, a))
        report.metrics[f"{convention.value}.p_value"] = comparison.p_value
        report.metrics[f"{convention.value}.worst_bin_relative"] = comparison.worst_relative
        if comparison.passed:
            passing.append(convention)
    report.metrics["fitted_convention"] = passing[0].value if len(passing) == 1 else "ambiguous"
    report.metrics["mean_inverse"] = mean_inverse
    report.expect(len(passing) == 1, f"通过检验的约定个数为 {len(passing)}")
    # 每个对角元的倒数均值 E[1/a] = (M-K+1)/σ²
    expected_inverse = (dims.m - dims.k + 1) / sigma2
    report.expect(_within(mean_inverse, expected_inverse, 0.01, stderr_inverse),
                  f"E[1/a] 偏离 {expected_inverse:.6g}: {mean_inverse:.6g}")
    return report


def _capacity_chunks(cfg: ChannelConfig, n: int, seed: int) -> Tuple[List[np.ndarray], float]:
    dims, snr = cfg.dims, cfg.snr

    def task(rng, count):
        h = sample_channels(dims, rng, count)
        hh = np.conj(np.swapaxes(h, -1, -2))
        _, big = np.linalg.slogdet(np.eye(dims.m) + snr * (h @ hh))
        _, small = np.linalg.slogdet(np.eye(dims.k) + snr * (hh @ h))
        mismatch = np.max(np.abs(big - small) / np.maximum(np.abs(big), 1.0))
        return big * UnitConstants.BITS_PER_NAT, float(mismatch)

    chunks = map_chunks(task, n, seed, NS_CAPACITY)
    return [c[0] for c in chunks], max(c[1] for c in chunks)


def empirical_capacity(cfg: ChannelConfig, n: int, seed: int = 0) -> float:
    """蒙特卡洛 E[log2 det(I_M + ρHHᴴ)]"""
    _require_samples(n)
    chunks, _ = _capacity_chunks(cfg, n, seed)
    return mean_and_stderr(chunks)[0]


def check_capacity(cfg: ChannelConfig, n: int, seed: int = 0) -> CheckReport:
    """闭式容量与蒙特卡洛均值对比（1%），并逐样本校验 Sylvester 行列式恒等式"""
    _require_samples(n, 10_000)
    chunks, mismatch = _capacity_chunks(cfg, n, seed)
    mean, stderr = mean_and_stderr(chunks)
    closed = capacity(cfg)
    report = CheckReport(f"capacity[K={cfg.dims.k},M={cfg.dims.m},snr={cfg.snr_db:g}dB]", n_samples=n)
    report.metrics.update({"empirical": mean, "stderr": stderr, "closed_form": closed,
                           "determinant_mismatch": mismatch})
    report.expect(_within(mean, closed, 0.01, stderr), f"容量偏差超限: {mean:.6g} vs {closed:.6g}")
    report.expect(mismatch <= 1e-8, f"行列式恒等式偏差: {mismatch:.3g}")
    return report


def empirical_upper_bound(cfg: ChannelConfig, n: int, seed: int = 0) -> Dict[str, float]:
    """
    蒙特卡洛注水：在采样特征值上求水位并平均速率

    Args:
        cfg: 信道配置
        n: 样本数
        seed: 根种子

    Returns:
        {"rate": 速率, "stderr": 标准误差, "log2_nu": 水位}
    """
    _require_samples(n)
    if cfg.capacity_bits == 0.0:
        return {"rate": 0.0, "stderr": 0.0, "log2_nu": math.inf}
    t = cfg.dims.t
    chunks = map_chunks(lambda rng, count: pooled_eigenvalues(sample_channels(cfg.dims, rng, count)),
                        n, seed, NS_UPPER_BOUND)
    values = np.concatenate(chunks)
    log2_gain = np.log2(cfg.snr * np.maximum(values, np.finfo(float).tiny))

    def residual(log2_nu: float) -> float:
        return t * math.fsum(np.maximum(log2_gain - log2_nu, 0.0)) / values.size - cfg.capacity_bits

    lo = math.log2(cfg.snr) - 2.0 * cfg.capacity_bits / t - 10.0
    hi = float(np.max(log2_gain)) + 1.0
    lo, hi = widen_bracket(residual, lo, hi)
    log2_nu = bisect_monotone(residual, lo, hi)
    log_one_plus_nu = np.logaddexp2(0.0, log2_nu)
    per_value = np.where(log2_gain > log2_nu,
                         np.log1p(cfg.snr * values) * UnitConstants.BITS_PER_NAT - log_one_plus_nu, 0.0)
    # 每个信道样本贡献 T 个特征值之和
    per_sample = t * per_value.reshape(-1, t).mean(axis=1)
    rate, stderr = mean_and_stderr([per_sample])
    return {"rate": rate, "stderr": stderr, "log2_nu": log2_nu}


def check_upper_bound(cfg: ChannelConfig, n: int, seed: int = 0) -> CheckReport:
    """闭式上界与蒙特卡洛注水对比"""
    _require_samples(n, 10_000)
    empirical = empirical_upper_bound(cfg, n, seed)
    closed = upper_bound(cfg)
    report = CheckReport(f"upper_bound[K={cfg.dims.k},M={cfg.dims.m},snr={cfg.snr_db:g}dB,"
                         f"C={cfg.capacity_bits:g}]", n_samples=n)
    report.metrics.update({"empirical": empirical["rate"], "stderr": empirical["stderr"],
                           "closed_form": closed})
    report.expect(_within(empirical["rate"], closed, 0.02, empirical["stderr"]),
                  f"上界偏差超限: {empirical['rate']:.6g} vs {closed:.6g}")
    return report


def check_mmse_ratio(cfg: ChannelConfig, n: int, seed: int = 0) -> CheckReport:
    """E[λ/(λ+σ²)] 的闭式积分与采样均值对比（0.5%）"""
    _require_samples(n, 10_000)
    sigma2 = cfg.sigma2
    chunks = map_chunks(lambda rng, count: pooled_eigenvalues(sample_channels(cfg.dims, rng, count)),
                        n, seed, NS_MMSE)
    mean, stderr = mean_and_stderr([c / (c + sigma2) for c in chunks])
    closed = mmse_params(cfg).e_ratio
    report = CheckReport(f"mmse_ratio[K={cfg.dims.k},M={cfg.dims.m},snr={cfg.snr_db:g}dB]", n_samples=n)
    report.metrics.update({"empirical": mean, "stderr": stderr, "closed_form": closed})
    report.expect(_within(mean, closed, 0.005, stderr), f"e_ratio 偏差超限: {mean:.6g} vs {closed:.6g}")
    return report
