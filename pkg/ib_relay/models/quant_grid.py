# This Python file uses the following encoding: utf-8

"""
量化网格与 QCI 功率分配数据结构
"""

import math
from dataclasses import dataclass
from typing import Dict, Any, Sequence, Tuple
from ..utils.exceptions import ValidationError


def entropy_bits(pmf: Sequence[float]) -> float:
    """离散分布的熵（比特），约定 0·log0 = 0"""
    return math.fsum(-p * math.log2(p) for p in pmf if p > 0.0)


@dataclass(frozen=True)
class QuantGrid:
    """
    噪声电平量化网格

    points 保存 J-1 个有限量化点 b_1 ≤ … ≤ b_{J-1}，最后一级 b_J = +∞ 隐含；
    pmf 保存 J 个电平的概率 P_j。
    """

    points: Tuple[float, ...]
    pmf: Tuple[float, ...]
    entropy_bits: float

    def __post_init__(self):
        if len(self.pmf) != len(self.points) + 1:
            raise ValidationError(
                f"概率个数应为量化点个数加一: {len(self.pmf)} vs {len(self.points)}", field="pmf")
        if any(not (b > 0.0) or math.isinf(b) for b in self.points):
            raise ValidationError("量化点必须为有限正数", field="points")
        if any(b2 < b1 for b1, b2 in zip(self.points, self.points[1:])):
            raise ValidationError("量化点必须非递减", field="points")
        if any(p < 0.0 for p in self.pmf):
            raise ValidationError("概率不能为负", field="pmf")
        if abs(math.fsum(self.pmf) - 1.0) > 1e-9:
            raise ValidationError(f"概率和不为 1: {math.fsum(self.pmf)}", field="pmf")

    @classmethod
    def from_pmf(cls, points: Sequence[float], pmf: Sequence[float]) -> 'QuantGrid':
        """由量化点和概率构造网格，熵自动计算"""
        pmf = tuple(float(p) for p in pmf)
        return cls(tuple(float(b) for b in points), pmf, entropy_bits(pmf))

    @property
    def levels(self) -> int:
        """电平数 J"""
        return len(self.pmf)

    @property
    def level_snrs(self) -> Tuple[float, ...]:
        """每级等效信噪比 ρ_j = 1/b_j，最后一级为 0"""
        return tuple(1.0 / b for b in self.points) + (0.0,)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "points": list(self.points),
            "pmf": list(self.pmf),
            "entropy_bits": self.entropy_bits
        }


@dataclass(frozen=True)
class QciAllocation:
    """
    QCI 每级比特分配

    c_j = max(0, log2(ρ_j/ν))，c_J = 0；active_levels 为活跃电平数 l。
    水位以 log2 形式保存，nu 在极大预算下可能下溢为 0。
    """

    log2_nu: float
    c: Tuple[float, ...]
    level_snrs: Tuple[float, ...]
    active_levels: int

    @property
    def nu(self) -> float:
        return 2.0 ** self.log2_nu

    def spent_bits(self, grid: QuantGrid, k: int) -> float:
        """Σ K·P_j·c_j"""
        return math.fsum(k * p * c for p, c in zip(grid.pmf, self.c))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "nu": self.nu,
            "log2_nu": self.log2_nu,
            "c": list(self.c),
            "level_snrs": list(self.level_snrs),
            "active_levels": self.active_levels
        }
