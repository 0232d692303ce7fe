"""
ib_relay - 无信道状态信息中继的 MIMO 信息瓶颈速率界

在瑞利衰落下，中继经容量为 C 的无差错链路把接收信号压缩转发给目的端。
本包给出：
- 知情接收端注水上界与遍历信道容量
- 量化信道求逆 (QCI) 下界：量化网格、注水分配与渐近值
- MMSE 估计压缩下界
- 闭式量的蒙特卡洛校验套件
- 参数扫描、CSV/SVG 输出与命令行

使用示例：
    from ib_relay import ChannelConfig, upper_bound, qci_quantile_rate, mmse_rate

    cfg = ChannelConfig.from_snr_db(k=2, m=2, snr_db=20.0, capacity_bits=8.0)
    print(upper_bound(cfg), qci_quantile_rate(cfg, 16), mmse_rate(cfg))
"""

__version__ = "1.0.0"
__license__ = "GPL-3.0"

# 核心类型
from .core.enums import QuadratureKind, DofConvention, SweepAxis, Scheme, OracleLevel
from .models import (
    ChannelDims, ChannelConfig, QuantGrid, QciAllocation,
    WaterfillSolution, MmseParams, MmseRate, UbLimits, QciLimits, MmseLimits,
    SweepSpec, SweepRow
)

# 速率界
from .spectra import EigDensity, NoiseLevelDensity
from .bounds import scalar_ib_rate, solve_water_level, upper_bound, capacity, ub_limits
from .qci import (
    grid_pmf, quantile_grid, lemma_grid, qci_waterfill, qci_rate, qci_quantile_rate,
    qci_limit_rate, qci_limits, repr_fading
)
from .mmse import mmse_params, mmse_rate, mmse_limits

# 工具
from .events import EventBus, Event, EventType
from .schemes import SchemeFactory
from .oracle import run_oracle_suite
from .cli import run_sweep, figure_spec, emit_csv, emit_svg
from .utils.config import Config
from .utils.logger import get_logger
from .utils.exceptions import IbRelayError

__all__ = [
    'QuadratureKind', 'DofConvention', 'SweepAxis', 'Scheme', 'OracleLevel',
    'ChannelDims', 'ChannelConfig', 'QuantGrid', 'QciAllocation',
    'WaterfillSolution', 'MmseParams', 'MmseRate', 'UbLimits', 'QciLimits', 'MmseLimits',
    'SweepSpec', 'SweepRow',
    'EigDensity', 'NoiseLevelDensity',
    'scalar_ib_rate', 'solve_water_level', 'upper_bound', 'capacity', 'ub_limits',
    'grid_pmf', 'quantile_grid', 'lemma_grid', 'qci_waterfill', 'qci_rate', 'qci_quantile_rate',
    'qci_limit_rate', 'qci_limits', 'repr_fading',
    'mmse_params', 'mmse_rate', 'mmse_limits',
    'EventBus', 'Event', 'EventType', 'SchemeFactory',
    'run_oracle_suite', 'run_sweep', 'figure_spec', 'emit_csv', 'emit_svg',
    'Config', 'get_logger', 'IbRelayError',
]
