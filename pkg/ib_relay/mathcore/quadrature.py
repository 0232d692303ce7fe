# This Python file uses the following encoding: utf-8

"""
数值积分 - 高斯-拉盖尔规则与自适应分段积分
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, List, Optional, Tuple
import numpy as np
from scipy import integrate as sp_integrate
from scipy.special import roots_laguerre
from ..core.enums import QuadratureKind
from ..utils.config import Config
from ..utils.constants import NumericConstants
from ..utils.logger import get_logger
from ..utils.exceptions import QuadratureError, ValidationError

logger = get_logger(__name__)


@dataclass(frozen=True)
class QuadratureRule:
    """
    积分规则

    高斯-拉盖尔规则携带节点与权重；自适应规则节点为空，
    由 QUADPACK 在每个分段上自行细分。
    """

    kind: QuadratureKind
    nodes: Tuple[float, ...] = ()
    weights: Tuple[float, ...] = ()

    def __post_init__(self):
        if len(self.nodes) != len(self.weights):
            raise ValidationError("节点与权重个数不一致", field="nodes")
        if self.kind is QuadratureKind.GAUSS_LAGUERRE:
            if not self.nodes:
                raise ValidationError("高斯-拉盖尔规则至少需要一个节点", field="nodes")
            if any(b <= a for a, b in zip(self.nodes, self.nodes[1:])):
                raise ValidationError("节点必须严格递增", field="nodes")
            if any(w <= 0 for w in self.weights):
                raise ValidationError("权重必须为正", field="weights")

    @property
    def size(self) -> int:
        return len(self.nodes)


@lru_cache(maxsize=32)
def gauss_laguerre_rule(n: int) -> QuadratureRule:
    """n 节点高斯-拉盖尔规则（权函数 e^{-x}）"""
    if n < 1:
        raise ValidationError(f"节点数必须为正: {n}", field="n")
    nodes, weights = roots_laguerre(n)
    return QuadratureRule(QuadratureKind.GAUSS_LAGUERRE,
                          tuple(float(x) for x in nodes),
                          tuple(float(w) for w in weights))


ADAPTIVE_RULE = QuadratureRule(QuadratureKind.ADAPTIVE_INTERVAL)


def default_rule() -> QuadratureRule:
    """按配置返回默认积分规则"""
    config = Config()
    if config.get_quadrature_kind() is QuadratureKind.GAUSS_LAGUERRE:
        return gauss_laguerre_rule(config.get_gauss_laguerre_nodes())
    return ADAPTIVE_RULE


def _gauss_laguerre(f: Callable, lower: float, rule: QuadratureRule) -> float:
    # ∫_lower^∞ f(λ) dλ = ∫_0^∞ [f(lower+u) e^u] e^{-u} du
    u = np.asarray(rule.nodes)
    w = np.asarray(rule.weights)
    values = np.array([f(lower + x) for x in u], dtype=float)
    return math.fsum(w * np.exp(u) * values)


def _accepted(value: float, abserr: float, previous: Optional[float],
              epsabs: float, epsrel: float) -> bool:
    tol = max(epsabs, epsrel * abs(value))
    if abserr <= tol:
        return True
    # QUADPACK 报舍入告警，但细分后估计不再变化
    loose = NumericConstants.QUAD_AGREEMENT_RTOL * max(1.0, abs(value))
    return previous is not None and abs(value - previous) <= tol and abserr <= loose


def _quad_piece(f: Callable, a: float, b: float) -> float:
    epsabs, epsrel, limit, refinements = Config().get_quad_tolerances()
    estimates = []
    for attempt in range(refinements + 1):
        out = sp_integrate.quad(f, a, b, epsabs=epsabs, epsrel=epsrel,
                                limit=limit * 2 ** attempt, full_output=1)
        value, abserr = out[0], out[1]
        previous = estimates[-1] if estimates else None
        estimates.append(value)
        if not math.isfinite(value):
            continue
        # 收敛时只返回三元组
        if len(out) == 3 or _accepted(value, abserr, previous, epsabs, epsrel):
            return value
        logger.debug(f"自适应积分未收敛 [{a}, {b}]，第 {attempt + 1} 次: {out[3]}")
    error_msg = f"积分在 [{a}, {b}] 上不收敛，最后两次估计: {estimates[-2:]}"
    logger.error(error_msg)
    raise QuadratureError(error_msg, estimates=estimates[-2:])


def log_split(a: float, b: float) -> List[float]:
    """a > 0 且 b/a 很大时返回 (a, b) 内的几何分段点（约每十倍程一个，有上限）"""
    if not (a > 0 and math.isfinite(b)):
        return []
    span = math.log10(b) - math.log10(a)
    if span <= math.log10(NumericConstants.QUAD_LOG_SPLIT_RATIO):
        return []
    pieces = min(int(math.ceil(span)), NumericConstants.QUAD_LOG_SPLIT_MAX_PIECES)
    inner = np.geomspace(a, b, pieces + 1)[1:-1]
    return [float(x) for x in inner]


def _adaptive(f: Callable, lower: float, upper: float, points: Iterable[float]) -> float:
    cuts = sorted({float(p) for p in points if lower < p < upper and math.isfinite(p)})
    edges = [lower] + cuts + [upper]
    pieces = []
    for a, b in zip(edges, edges[1:]):
        inner = [a] + log_split(a, b) + [b]
        pieces.extend(zip(inner, inner[1:]))
    return math.fsum(_quad_piece(f, a, b) for a, b in pieces)


def integrate(f: Callable[[float], float], lower: float, upper: float = math.inf,
              rule: Optional[QuadratureRule] = None,
              points: Iterable[float] = ()) -> float:
    """
    计算 ∫_lower^upper f(λ) dλ

    Args:
        f: 被积函数（标量到标量）
        lower: 积分下限，非负
        upper: 积分上限，可为无穷
        rule: 积分规则，缺省按配置
        points: 自适应规则的分段点（拐点、谱集中位置等）

    Returns:
        积分估计值

    Raises:
        QuadratureError: 细分到上限后仍不收敛
    """
    if not (lower >= 0) or not (upper >= lower):
        raise ValidationError(f"积分区间无效: [{lower}, {upper}]", field="lower")
    if upper == lower:
        return 0.0
    if rule is None:
        rule = default_rule()
    # 高斯-拉盖尔只处理半无穷区间，有限区间交给自适应规则
    if rule.kind is QuadratureKind.GAUSS_LAGUERRE and math.isinf(upper):
        return _gauss_laguerre(f, lower, rule)
    return _adaptive(f, lower, upper, points)
