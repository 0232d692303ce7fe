# This Python file uses the following encoding: utf-8

"""
经验直方图与闭式分布的拟合优度比较
"""

import math
from dataclasses import dataclass, field
from typing import Callable, List, Tuple
import numpy as np
from scipy.stats import chi2
from ..utils.config import Config
from ..utils.constants import OracleConstants
from ..utils.exceptions import ValidationError


@dataclass(frozen=True)
class EmpiricalHistogram:
    """
    等概率分箱直方图

    edges 从支撑下界 0 到 +∞，masses 为各箱经验频率。
    """

    edges: Tuple[float, ...]
    masses: Tuple[float, ...]
    n_samples: int

    def __post_init__(self):
        if len(self.edges) != len(self.masses) + 1:
            raise ValidationError("边界个数应为箱数加一", field="edges")
        if any(b <= a for a, b in zip(self.edges, self.edges[1:])):
            raise ValidationError("直方图边界必须严格递增", field="edges")
        if abs(math.fsum(self.masses) - 1.0) > 1e-12:
            raise ValidationError(f"直方图质量和不为 1: {math.fsum(self.masses)}", field="masses")

    @property
    def bins(self) -> int:
        return len(self.masses)


def default_bin_count(n: int) -> int:
    """每箱期望计数不少于 500，箱数不超过配置值"""
    configured = int(Config().get("oracle.histogram_bins", OracleConstants.HISTOGRAM_BINS))
    return max(2, min(configured, n // 500))


def equal_mass_histogram(samples: np.ndarray, bins: int = None) -> EmpiricalHistogram:
    """
    以经验分位数为边界的直方图

    Args:
        samples: 一维正样本
        bins: 箱数，缺省按样本量

    Returns:
        经验直方图
    """
    samples = np.sort(np.asarray(samples, dtype=float).reshape(-1))
    n = samples.size
    if n < 2:
        raise ValidationError("样本过少", field="samples")
    if bins is None:
        bins = default_bin_count(n)
    inner = np.quantile(samples, np.arange(1, bins) / bins)
    inner = np.unique(inner)
    edges = np.concatenate(([0.0], inner, [np.inf]))
    counts = np.diff(np.searchsorted(samples, edges, side="right"))
    masses = counts / n
    masses[-1] = 1.0 - math.fsum(masses[:-1])
    return EmpiricalHistogram(tuple(float(e) for e in edges), tuple(float(m) for m in masses), n)


@dataclass
class HistogramComparison:
    """逐箱比较结果"""

    observed: List[int]
    expected: List[float]
    worst_relative: float
    worst_sigma: float
    failed_bins: List[int] = field(default_factory=list)
    chi2_statistic: float = 0.0
    p_value: float = 1.0

    @property
    def passed(self) -> bool:
        return not self.failed_bins and self.p_value >= OracleConstants.CHI2_MIN_PVALUE


def compare_histogram(hist: EmpiricalHistogram, cdf: Callable[[float], float]) -> HistogramComparison:
    """
    用闭式 CDF 检验直方图

    期望计数不少于 500 的箱：相对误差不超过 5% 或偏差不超过 4.5 个二项标准差即通过；
    另要求卡方检验 p 值不低于 1e-4。

    Args:
        hist: 经验直方图
        cdf: 闭式累积分布函数

    Returns:
        比较结果
    """
    config = Config()
    relative_tol = float(config.get("oracle.bin_relative_tolerance", OracleConstants.BIN_RELATIVE_TOLERANCE))
    sigma_tol = float(config.get("oracle.bin_sigma_tolerance", OracleConstants.BIN_SIGMA_TOLERANCE))
    n = hist.n_samples
    cdf_values = [0.0] + [cdf(e) for e in hist.edges[1:-1]] + [1.0]
    expected_mass = [max(hi - lo, 0.0) for lo, hi in zip(cdf_values, cdf_values[1:])]
    observed = [int(round(m * n)) for m in hist.masses]
    expected = [p * n for p in expected_mass]

    failed = []
    worst_relative = 0.0
    worst_sigma = 0.0
    statistic = 0.0
    for index, (obs, exp, p) in enumerate(zip(observed, expected, expected_mass)):
        if exp <= 0.0:
            if obs > 0:
                failed.append(index)
            continue
        statistic += (obs - exp) ** 2 / exp
        if exp < 500.0:
            continue
        relative = abs(obs - exp) / exp
        sigma = abs(obs - exp) / math.sqrt(n * p * (1.0 - p))
        worst_relative = max(worst_relative, relative)
        worst_sigma = max(worst_sigma, sigma)
        if relative > relative_tol and sigma > sigma_tol:
            failed.append(index)
    dof = max(1, len(observed) - 1)
    return HistogramComparison(observed, expected, worst_relative, worst_sigma, failed,
                               statistic, float(chi2.sf(statistic, dof)))
