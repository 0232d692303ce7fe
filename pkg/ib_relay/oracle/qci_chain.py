# This Python file uses the following encoding: utf-8

"""
QCI 链路仿真

每个样本：迫零估计 x̃ = H⁺y = x + ñ，ñ ~ CN(0, A)，A = σ²(HᴴH)⁻¹；
对角元 a_k 向上取到网格 ⌈a_k⌉；再加方差 ⌈a_k⌉ - a_k 的人工噪声得到
x̂ = x + n̂，Cov(n̂|H) = A + diag(⌈a⌉ - a)。最后一级（⌈a⌉ = +∞）的子信道不携带信息，
仿真中剔除。
"""

import math
from typing import Optional
import numpy as np
from ..models.channel import ChannelDims
from ..models.quant_grid import QuantGrid
from ..qci.representation import repr_fading, surrogate_compression_rate
from ..qci.waterfill import qci_waterfill
from ..utils.logger import get_logger
from ..utils.exceptions import UnsupportedConfigurationError, ValidationError
from .checks import NS_QCI_CHAIN
from .reports import CheckReport
from .sampling import complex_gaussian, well_conditioned_channels, check_resample_budget
from .streams import map_chunks

logger = get_logger(__name__)


def ceiling_levels(a: np.ndarray, grid: QuantGrid) -> np.ndarray:
    """⌈a⌉ 所在电平序号（0 起），超过最后一个有限点为 J-1"""
    return np.searchsorted(np.asarray(grid.points), a, side="left")


def _chain_chunk(dims: ChannelDims, sigma2: float, grid: QuantGrid, fading: np.ndarray,
                 rng: np.random.Generator, count: int):
    k = dims.k
    levels_total = grid.levels
    points = np.append(np.asarray(grid.points), np.inf)
    h, resampled = well_conditioned_channels(dims, rng, count)
    hh = np.conj(np.swapaxes(h, -1, -2))
    a_matrix = sigma2 * np.linalg.inv(hh @ h)
    a = np.real(np.diagonal(a_matrix, axis1=-2, axis2=-1))
    level = ceiling_levels(a, grid)
    ceiled = points[level]
    finite = level < levels_total - 1

    # 迫零噪声 ñ = (HᴴH)⁻¹Hᴴn，人工噪声只加在有限电平上
    noise = complex_gaussian(rng, (count, dims.m, 1)) * math.sqrt(sigma2)
    zf_noise = (np.linalg.inv(hh @ h) @ hh @ noise)[..., 0]
    artificial_var = np.where(finite, ceiled - a, 0.0)
    artificial = complex_gaussian(rng, (count, k)) * np.sqrt(artificial_var)
    total_noise = zf_noise + artificial

    # 全部有限的样本：用 Cholesky 因子白化 n̂
    all_finite = np.all(finite, axis=1)
    whitened_sum = np.zeros((k, k), dtype=complex)
    whitened_count = 0
    if np.any(all_finite):
        cov = a_matrix[all_finite] + artificial_var[all_finite][:, :, None] * np.eye(k)
        chol = np.linalg.cholesky(cov)
        w = np.linalg.solve(chol, total_noise[all_finite][..., None])
        whitened_sum = (w @ np.conj(np.swapaxes(w, -1, -2))).sum(axis=0)
        whitened_count = int(all_finite.sum())

    # 替代表示 z = φ·x̂ + n'，逐电平统计 |z|² 与预测方差之比
    x = complex_gaussian(rng, (count, k))
    xhat = x + total_noise
    phi = np.where(finite, fading[level], 0.0)
    z = phi * xhat + complex_gaussian(rng, (count, k))
    predicted = phi ** 2 * (1.0 + np.where(finite, ceiled, 0.0)) + 1.0
    ratio = np.abs(z) ** 2 / predicted

    level_counts = np.bincount(level.reshape(-1), minlength=levels_total)
    ratio_sums = np.bincount(level.reshape(-1), weights=ratio.reshape(-1), minlength=levels_total)
    ratio_squares = np.bincount(level.reshape(-1), weights=(ratio ** 2).reshape(-1), minlength=levels_total)
    min_artificial = float(np.min(np.where(finite, ceiled - a, np.inf))) if np.any(finite) else math.inf
    return {
        "resampled": resampled,
        "whitened_sum": whitened_sum,
        "whitened_count": whitened_count,
        "level_counts": level_counts,
        "ratio_sums": ratio_sums,
        "ratio_squares": ratio_squares,
        "min_artificial": min_artificial,
    }


def simulate_qci_chain(dims: ChannelDims, sigma2: float, grid: QuantGrid, n: int, seed: int = 0,
                       capacity_bits: Optional[float] = None) -> CheckReport:
    """
    仿真 QCI 链路并校验：白化后的 n̂ 协方差为单位阵、电平频率符合网格概率、
    人工噪声方差非负、替代表示的协方差与压缩速率符合预测

    Args:
        dims: 天线维度（K ≤ M）
        sigma2: 噪声功率
        grid: 量化网格（应由同一 σ² 的噪声电平密度得到）
        n: 样本数
        seed: 根种子
        capacity_bits: 总瓶颈容量，用于每级比特分配；缺省为 K·(H0 + 2)

    Returns:
        校验报告
    """
    if dims.k > dims.m:
        raise UnsupportedConfigurationError(f"QCI 要求 K ≤ M: {dims}", dims=dims)
    if n < 2:
        raise ValidationError(f"样本数过少: {n}", field="n")
    k = dims.k
    if capacity_bits is None:
        capacity_bits = k * (grid.entropy_bits + 2.0)
    alloc = qci_waterfill(grid, k, capacity_bits)
    points = list(grid.points) + [math.inf]
    fading = np.array([repr_fading(b, c) if math.isfinite(b) else 0.0
                        for b, c in zip(points, alloc.c)])

    chunks = map_chunks(lambda rng, count: _chain_chunk(dims, sigma2, grid, fading, rng, count),
                        n, seed, NS_QCI_CHAIN)
    resampled = sum(c["resampled"] for c in chunks)
    report = CheckReport(f"qci_chain[K={dims.k},M={dims.m},J={grid.levels}]", n_samples=n,
                         resampled=resampled)
    check_resample_budget(resampled, n, "qci_chain")

    # (1) 白化协方差
    whitened_count = sum(c["whitened_count"] for c in chunks)
    if whitened_count:
        whitened = sum(c["whitened_sum"] for c in chunks) / whitened_count
        bound = 4.0 / math.sqrt(whitened_count)
        diag_gap = float(np.max(np.abs(np.real(np.diagonal(whitened)) - 1.0)))
        off_gap = float(np.max(np.abs(whitened - np.diag(np.diagonal(whitened))))) if k > 1 else 0.0
        report.metrics["whitened_diag_gap"] = diag_gap
        report.metrics["whitened_off_diag"] = off_gap
        report.expect(diag_gap <= bound, f"白化后对角元偏离 1: {diag_gap:.3g}")
        report.expect(off_gap <= bound, f"白化后非对角元过大: {off_gap:.3g}")
    else:
        report.fail("没有全部电平有限的样本")

    # (2) 电平频率
    total = n * k
    counts = sum(c["level_counts"] for c in chunks)
    for j, p in enumerate(grid.pmf):
        frequency = counts[j] / total
        sigma = math.sqrt(max(p * (1.0 - p), 1e-300) / total)
        report.metrics[f"level{j}.frequency"] = float(frequency)
        report.expect(abs(frequency - p) <= 4.0 * sigma + 1e-12,
                      f"电平 {j} 频率 {frequency:.4f} 偏离 {p:.4f}")

    # (3) 人工噪声方差
    min_artificial = min(c["min_artificial"] for c in chunks)
    report.metrics["min_artificial_variance"] = min_artificial
    report.expect(min_artificial >= 0.0, f"人工噪声方差为负: {min_artificial:.3g}")

    # (4) 替代表示
    ratio_sums = sum(c["ratio_sums"] for c in chunks)
    ratio_squares = sum(c["ratio_squares"] for c in chunks)
    for j in range(grid.levels - 1):
        if counts[j] < 2:
            continue
        mean = ratio_sums[j] / counts[j]
        stderr = math.sqrt(max(ratio_squares[j] / counts[j] - mean ** 2, 0.0) / (counts[j] - 1))
        report.metrics[f"level{j}.z_variance_ratio"] = float(mean)
        report.expect(abs(mean - 1.0) <= 4.0 * stderr + 1e-12, f"电平 {j} 的 z 方差偏离预测: {mean:.4f}")
        rate = surrogate_compression_rate(points[j], alloc.c[j])
        report.expect(abs(rate - alloc.c[j]) <= 1e-9, f"电平 {j} 压缩速率 {rate:.9g} ≠ c_j")
    return report
