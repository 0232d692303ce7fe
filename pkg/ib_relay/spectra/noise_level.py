# This Python file uses the following encoding: utf-8

"""
信道求逆噪声电平 a 的分布

a 为 σ²(HᴴH)⁻¹ 的对角元。统一写成 a = c/G，G ~ Gamma(n, 1)：
    complex-gamma : n = M-K+1,     c = σ²
    paper-half-dof: n = (M-K+1)/2, c = σ²/2（逆卡方，自由度 M-K+1）
"""

import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence
import numpy as np
from scipy.special import gammaln, gammaincc
from ..core.enums import DofConvention
from ..mathcore.quadrature import QuadratureRule, integrate
from ..mathcore.roots import bisect_monotone, widen_bracket
from ..models.channel import ChannelDims
from ..models.quant_grid import QuantGrid
from ..utils.config import Config
from ..utils.logger import get_logger
from ..utils.exceptions import UnsupportedConfigurationError, ValidationError

logger = get_logger(__name__)


@dataclass(frozen=True)
class NoiseLevelDensity:
    """噪声电平密度（要求 K ≤ M）"""

    dims: ChannelDims
    sigma2: float
    dof_convention: Optional[DofConvention] = field(default=None)

    def __post_init__(self):
        if self.dims.k > self.dims.m:
            raise UnsupportedConfigurationError(
                f"信道求逆要求 K ≤ M: {self.dims}", dims=self.dims)
        if not (self.sigma2 > 0):
            raise ValidationError(f"噪声功率必须为正: {self.sigma2}", field="sigma2")
        if self.dof_convention is None:
            object.__setattr__(self, "dof_convention", Config().get_default_dof_convention())

    @property
    def shape(self) -> float:
        """伽马变量 G 的形状参数 n"""
        dof = self.dims.m - self.dims.k + 1
        if self.dof_convention is DofConvention.PAPER_HALF_DOF:
            return dof / 2.0
        return float(dof)

    @property
    def scale(self) -> float:
        """a = scale / G 中的常数 c"""
        if self.dof_convention is DofConvention.PAPER_HALF_DOF:
            return self.sigma2 / 2.0
        return self.sigma2


def noise_level_pdf(d: NoiseLevelDensity, a: float) -> float:
    """
    噪声电平的边缘密度

    Args:
        d: 噪声电平密度
        a: 自变量，a > 0

    Returns:
        密度值
    """
    if not (a > 0):
        raise ValidationError(f"噪声电平必须为正: {a}", field="a")
    n, c = d.shape, d.scale
    if math.isinf(a):
        return 0.0
    log_value = n * math.log(c) - gammaln(n) - (n + 1.0) * math.log(a) - c / a
    return math.exp(log_value)


def noise_level_cdf(d: NoiseLevelDensity, a: float) -> float:
    """P(a' ≤ a) = Q(n, c/a)，Q 为正则化上不完全伽马函数"""
    if a <= 0:
        return 0.0
    if math.isinf(a):
        return 1.0
    return float(gammaincc(d.shape, d.scale / a))


def noise_level_expectation(d: NoiseLevelDensity, g: Callable[[float], float],
                            rule: Optional[QuadratureRule] = None) -> float:
    """
    E[g(a)]，换元到伽马变量 G 上积分

    Args:
        d: 噪声电平密度
        g: 被平均的函数
        rule: 积分规则，缺省按配置

    Returns:
        期望值
    """
    n, c = d.shape, d.scale
    log_norm = -gammaln(n)

    def integrand(x: float) -> float:
        if x <= 0:
            return 0.0
        return g(c / x) * math.exp((n - 1.0) * math.log(x) - x + log_norm)

    spread = math.sqrt(n)
    cuts = [n + k * spread for k in (-2.0, -1.0, 0.0, 1.0, 2.0, 4.0) if n + k * spread > 0]
    return integrate(integrand, 0.0, math.inf, rule, cuts)


def level_masses(d: NoiseLevelDensity, points: Sequence[float]) -> List[float]:
    """
    各量化区间 (b_{j-1}, b_j] 的概率，b_0 = 0，b_J = +∞

    Args:
        d: 噪声电平密度
        points: 有限量化点（非递减）

    Returns:
        J = len(points)+1 个概率
    """
    cdf = [0.0] + [noise_level_cdf(d, b) for b in points] + [1.0]
    return [max(0.0, hi - lo) for lo, hi in zip(cdf, cdf[1:])]


def noise_level_quantile(d: NoiseLevelDensity, q: float) -> float:
    """CDF 的反函数，在 ln a 上二分"""
    if not (0.0 < q < 1.0):
        raise ValidationError(f"分位数必须在 (0, 1) 内: {q}", field="q")
    lower_factor, upper_factor = Config().get_quantile_bracket_factors()

    def residual(log_a: float) -> float:
        return noise_level_cdf(d, math.exp(log_a)) - q

    lo = math.log(d.sigma2 * lower_factor)
    hi = math.log(d.sigma2 * upper_factor)
    lo, hi = widen_bracket(residual, lo, hi)
    return math.exp(bisect_monotone(residual, lo, hi))


def noise_level_quantiles(d: NoiseLevelDensity, j: int) -> QuantGrid:
    """
    等概率量化网格：CDF(b_i) = i/J

    Args:
        d: 噪声电平密度
        j: 电平数 J ≥ 2

    Returns:
        P_j = 1/J 的量化网格
    """
    if int(j) != j or j < 2:
        raise ValidationError(f"电平数必须为不小于 2 的整数: {j}", field="j")
    points = [noise_level_quantile(d, i / j) for i in range(1, j)]
    points = list(np.maximum.accumulate(points))
    logger.debug(f"分位数网格 J={j}: {points}")
    return QuantGrid.from_pmf(points, level_masses(d, points))
