# This Python file uses the following encoding: utf-8

"""
枚举定义 - 定义所有使用的枚举类型
"""

from enum import Enum, IntEnum


class QuadratureKind(Enum):
    """数值积分规则类型"""
    GAUSS_LAGUERRE = "gauss-laguerre"          # 半无穷区间固定节点
    ADAPTIVE_INTERVAL = "adaptive-interval"    # 自适应分段（QUADPACK）


class DofConvention(Enum):
    """噪声电平分布的自由度约定"""
    PAPER_HALF_DOF = "paper-half-dof"   # 逆卡方，自由度 M-K+1（形状参数取一半）
    COMPLEX_GAMMA = "complex-gamma"     # σ²/g，g ~ Gamma(M-K+1, 1)


class SweepAxis(Enum):
    """扫描参数轴"""
    SNR_DB = "snr_db"
    CAPACITY_BITS = "capacity_bits"
    ANTENNAS_M = "antennas_m"


class Scheme(Enum):
    """界的类型"""
    UB = "ub"       # 知情接收端上界
    QCI = "qci"     # 量化信道求逆下界
    MMSE = "mmse"   # MMSE 估计下界


class OracleLevel(IntEnum):
    """蒙特卡洛校验级别"""
    QUICK = 0
    FULL = 1

    @classmethod
    def from_name(cls, name: str) -> 'OracleLevel':
        """按名称（quick/full）解析"""
        try:
            return cls[name.strip().upper()]
        except KeyError:
            raise ValueError(f"未知的校验级别: {name}") from None
