"""
常量定义 - 定义项目中使用的各种常量值
"""

import math


# 单位换算
class UnitConstants:
    """单位换算常量"""

    # 自然对数转比特
    LN2 = math.log(2.0)
    BITS_PER_NAT = 1.0 / math.log(2.0)


# 数值计算相关常量
class NumericConstants:
    """数值计算相关常量"""

    # 高斯-拉盖尔节点数
    GAUSS_LAGUERRE_NODES = 64

    # 自适应积分容差
    QUAD_EPSABS = 1e-12
    QUAD_EPSREL = 1e-10
    QUAD_LIMIT = 200
    QUAD_MAX_REFINEMENTS = 2
    # 相邻两次估计一致时，abserr 允许放宽到的相对量级
    QUAD_AGREEMENT_RTOL = 1e-6
    # 分段两端之比超过该值时按十倍程插入分段点
    QUAD_LOG_SPLIT_RATIO = 1e3
    QUAD_LOG_SPLIT_MAX_PIECES = 32

    # 求根
    ROOT_TOLERANCE = 1e-12
    ROOT_MAX_ITERATIONS = 400
    BRACKET_WIDENINGS = 60

    # 水位残差（比特）
    WATER_LEVEL_RESIDUAL = 1e-9


# 谱分布相关常量
class SpectraConstants:
    """谱分布相关常量"""

    # 分位数搜索区间 [σ²·下限因子, σ²·上限因子]
    QUANTILE_LOWER_FACTOR = 1e-9
    QUANTILE_UPPER_FACTOR = 1e6

    # 特征值分段点：S + k·sqrt(S·T)
    EIG_BREAKPOINT_OFFSETS = (-4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0)


# QCI 相关常量
class QciConstants:
    """量化信道求逆相关常量"""

    # 预算必须超过 K·H0 的最小余量（比特）
    FEASIBILITY_MARGIN_BITS = 1e-9

    # 大 M 构造中 b1 = σ²/M·(1+ε)
    LEMMA_GRID_EPSILON = 0.05


# 蒙特卡洛校验相关常量
class OracleConstants:
    """蒙特卡洛校验相关常量"""

    QUICK_SAMPLES = 10_000
    FULL_SAMPLES = 100_000
    HISTOGRAM_BINS = 50
    CHUNK_SIZE = 10_000

    # 近奇异判据与重采样上限
    CONDITION_LIMIT = 1e12
    MAX_RESAMPLE_FRACTION = 1e-3

    # 分箱判据：相对误差或标准差倍数，二者满足其一
    BIN_RELATIVE_TOLERANCE = 0.05
    BIN_SIGMA_TOLERANCE = 4.5
    CHI2_MIN_PVALUE = 1e-4

    # 矩阵不等式松弛量
    INEQUALITY_SLACK = 1e-10


# 扫描与输出相关常量
class SweepConstants:
    """扫描与输出相关常量"""

    SIGNIFICANT_DIGITS = 6
    NA = "NA"

    # 上下界比较容差（比特）
    BOUND_SLACK = 1e-6

    # SVG 图幅（英寸）与分辨率
    SVG_WIDTH_IN = 7.2
    SVG_HEIGHT_IN = 4.8
    SVG_DPI = 100
    SVG_HASH_SALT = "ib-relay"
    SVG_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")
