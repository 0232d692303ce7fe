# This Python file uses the following encoding: utf-8

"""
Wishart 矩阵无序特征值密度

f(λ) = 1/T Σ_{i<T} i!/(i+S-T)! [L_i^{S-T}(λ)]² λ^{S-T} e^{-λ}
在对数域中计算，S 可到数百而不溢出。
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, List, Optional, Union
import numpy as np
from scipy.special import gammaln
from ..mathcore.special import laguerre_table
from ..mathcore.quadrature import QuadratureRule, integrate
from ..models.channel import ChannelDims
from ..utils.constants import SpectraConstants
from ..utils.exceptions import ValidationError

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class EigDensity:
    """特征值密度，完全由天线维度决定"""

    dims: ChannelDims

    @property
    def t(self) -> int:
        return self.dims.t

    @property
    def s(self) -> int:
        return self.dims.s


@lru_cache(maxsize=128)
def _log_coefficients(t: int, s: int) -> np.ndarray:
    # ln(i!/(i+S-T)!) - ln T
    i = np.arange(t, dtype=float)
    return gammaln(i + 1.0) - gammaln(i + s - t + 1.0) - math.log(t)


def eig_pdf(d: EigDensity, lam: ArrayLike) -> ArrayLike:
    """
    无序正特征值的概率密度

    Args:
        d: 特征值密度
        lam: 自变量 λ ≥ 0（标量或数组）

    Returns:
        密度值
    """
    x = np.asarray(lam, dtype=float)
    if np.any(x < 0):
        raise ValidationError(f"特征值必须非负: {lam}", field="lambda")
    t, s = d.t, d.s
    alpha = s - t
    table = laguerre_table(t, alpha, x)
    coeff = _log_coefficients(t, s).reshape((t,) + (1,) * x.ndim)
    with np.errstate(divide='ignore', invalid='ignore'):
        log_power = np.where(x > 0, alpha * np.log(np.where(x > 0, x, 1.0)),
                             0.0 if alpha == 0 else -np.inf)
        log_terms = coeff + 2.0 * np.log(np.abs(table)) + log_power - x
    value = np.exp(log_terms).sum(axis=0)
    # 递推在极大 λ 处溢出，该区域密度已可忽略
    value = np.nan_to_num(value, nan=0.0, posinf=0.0)
    if value.ndim == 0:
        return float(value)
    return value


def eig_breakpoints(d: EigDensity) -> List[float]:
    """谱质量集中位置附近的分段点 S + k·sqrt(S·T)"""
    spread = math.sqrt(d.s * d.t)
    return [d.s + k * spread for k in SpectraConstants.EIG_BREAKPOINT_OFFSETS if d.s + k * spread > 0]


def eig_expectation(d: EigDensity, g: Callable[[float], float],
                    rule: Optional[QuadratureRule] = None,
                    points: Iterable[float] = (), lower: float = 0.0) -> float:
    """
    E[g(λ)] = ∫ g(λ) f(λ) dλ

    Args:
        d: 特征值密度
        g: 被平均的函数
        rule: 积分规则，缺省按配置
        points: 额外分段点（如注水门限）
        lower: 积分下限，默认 0；门限以下 g 为零时可直接从门限积分

    Returns:
        期望值
    """
    cuts = list(eig_breakpoints(d)) + [p for p in points]
    return integrate(lambda x: g(x) * eig_pdf(d, x), lower, math.inf, rule, cuts)


def eig_cdf(d: EigDensity, x: float) -> float:
    """P(λ ≤ x)"""
    if x <= 0:
        return 0.0
    if math.isinf(x):
        return 1.0
    return integrate(lambda u: eig_pdf(d, u), 0.0, x, points=eig_breakpoints(d))
