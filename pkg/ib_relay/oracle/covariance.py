# This Python file uses the following encoding: utf-8

"""
MMSE 滤波器协方差恒等式的蒙特卡洛校验

F = (HHᴴ + σ²I_M)⁻¹H，样本均值应满足
    E[FᴴH]      = (T/K)·E[λ/(λ+σ²)]·I_K
    E[FᴴHHᴴF]   = (T/K)·E[λ²/(λ+σ²)²]·I_K
    E[FᴴF]      = (T/K)·E[λ/(λ+σ²)²]·I_K
    E[x̄x̄ᴴ]      = (T/K)·E[λ/(λ+σ²)]·I_K，x̄ = Fᴴy
"""

import math
from typing import Dict
import numpy as np
from ..models.channel import ChannelDims
from ..spectra.eig_density import EigDensity, eig_expectation
from ..utils.logger import get_logger
from ..utils.exceptions import ValidationError
from .checks import NS_COVARIANCE
from .reports import CheckReport
from .sampling import complex_gaussian, sample_channels
from .streams import map_chunks

logger = get_logger(__name__)

_IDENTITIES = ("FhH", "FhHHhF", "FhF", "xbar")


def expected_covariance_scales(dims: ChannelDims, sigma2: float) -> Dict[str, float]:
    """四个恒等式右侧的标量系数"""
    d = EigDensity(dims)
    scale = dims.t / dims.k
    ratio = eig_expectation(d, lambda lam: lam / (lam + sigma2), points=[sigma2])
    return {
        "FhH": scale * ratio,
        "FhHHhF": scale * eig_expectation(d, lambda lam: (lam / (lam + sigma2)) ** 2, points=[sigma2]),
        "FhF": scale * eig_expectation(d, lambda lam: lam / (lam + sigma2) ** 2, points=[sigma2]),
        "xbar": scale * ratio,
    }


def _chunk_moments(dims: ChannelDims, sigma2: float, rng: np.random.Generator, count: int):
    h = sample_channels(dims, rng, count)
    hh = np.conj(np.swapaxes(h, -1, -2))
    regularized = h @ hh + sigma2 * np.eye(dims.m)
    f = np.linalg.solve(regularized, h)
    fh = np.conj(np.swapaxes(f, -1, -2))
    x = complex_gaussian(rng, (count, dims.k, 1))
    noise = complex_gaussian(rng, (count, dims.m, 1)) * math.sqrt(sigma2)
    xbar = fh @ (h @ x + noise)
    matrices = {
        "FhH": fh @ h,
        "FhHHhF": fh @ h @ hh @ f,
        "FhF": fh @ f,
        "xbar": xbar @ np.conj(np.swapaxes(xbar, -1, -2)),
    }
    # 每个量返回 (和, 平方和)，用于均值与标准误差
    return {key: (value.sum(axis=0), (np.abs(value) ** 2).sum(axis=0)) for key, value in matrices.items()}, count


def check_covariance_identities(dims: ChannelDims, sigma2: float, n: int, seed: int = 0) -> CheckReport:
    """
    校验四个协方差恒等式：对角元在 1% 或 4 个标准误差内，非对角元不超过
    max(3/√n, 4 个标准误差)

    Args:
        dims: 天线维度（K 与 M 任意）
        sigma2: 噪声功率
        n: 样本数
        seed: 根种子

    Returns:
        校验报告
    """
    if n < 2:
        raise ValidationError(f"样本数过少: {n}", field="n")
    chunks = map_chunks(lambda rng, count: _chunk_moments(dims, sigma2, rng, count), n, seed, NS_COVARIANCE)
    expected = expected_covariance_scales(dims, sigma2)
    report = CheckReport(f"covariance[K={dims.k},M={dims.m},sigma2={sigma2:g}]", n_samples=n)
    off_diagonal = ~np.eye(dims.k, dtype=bool)

    for key in _IDENTITIES:
        total = sum(moments[key][0] for moments, _ in chunks)
        square = sum(moments[key][1] for moments, _ in chunks)
        mean = total / n
        variance = np.maximum(square / n - np.abs(mean) ** 2, 0.0)
        stderr = np.sqrt(variance / max(n - 1, 1))
        target = expected[key]

        diagonal = np.real(np.diagonal(mean))
        diagonal_se = np.diagonal(stderr)
        gap = np.abs(diagonal - target)
        worst = float(np.max(gap / max(abs(target), 1e-300)))
        report.metrics[f"{key}.expected"] = target
        report.metrics[f"{key}.worst_diag_relative"] = worst
        diag_ok = np.all((gap <= 0.01 * abs(target)) | (gap <= 4.0 * diagonal_se))
        report.expect(bool(diag_ok), f"{key} 对角元偏差超限: {diagonal} vs {target:.6g}")

        if dims.k > 1:
            off = np.abs(mean[off_diagonal])
            limit = np.maximum(3.0 / math.sqrt(n), 4.0 * stderr[off_diagonal])
            report.metrics[f"{key}.max_off_diag"] = float(np.max(off))
            report.expect(bool(np.all(off <= limit)), f"{key} 非对角元过大: {float(np.max(off)):.3g}")
    return report
