# This Python file uses the following encoding: utf-8

"""
参数扫描 - 在扫描网格上计算所选方案的速率
"""

from typing import List, Optional
from joblib import Parallel, delayed
from ..bounds import capacity
from ..core import Scheme
from ..events import EventBus, EventType, publish_if
from ..models import ChannelConfig, SweepRow, SweepSpec
from ..oracle import empirical_capacity, empirical_upper_bound
from ..schemes import BaseBoundStrategy, QciStrategy, SchemeFactory
from ..utils.config import Config
from ..utils.constants import SweepConstants
from ..utils.logger import get_logger

logger = get_logger(__name__)


def _evaluate_point(spec: SweepSpec, strategies: List[BaseBoundStrategy], index: int,
                    value: float, cfg: ChannelConfig, event_bus: Optional[EventBus]) -> SweepRow:
    row = SweepRow(axis_value=value)
    for strategy in strategies:
        rate = strategy.evaluate(cfg)
        if isinstance(strategy, QciStrategy):
            row.r_qci[strategy.bits] = rate
        elif strategy.scheme is Scheme.UB:
            row.r_ub = rate
        elif strategy.scheme is Scheme.MMSE:
            row.r_mmse = rate
    row.limits["capacity"] = capacity(cfg)
    if spec.mc_samples > 0:
        row.oracle["capacity"] = empirical_capacity(cfg, spec.mc_samples, spec.seed)
        row.oracle["upper_bound"] = empirical_upper_bound(cfg, spec.mc_samples, spec.seed)["rate"]

    if row.r_ub is not None:
        lower = [r for r in list(row.r_qci.values()) + [row.r_mmse] if r is not None]
        if any(r > row.r_ub + SweepConstants.BOUND_SLACK for r in lower):
            logger.warning(f"下界超过上界: {spec.axis.value}={value:g}, {row.series()}")
    publish_if(event_bus, EventType.SWEEP_POINT_EVALUATED, index=index, axis_value=value,
               series=row.series())
    return row


def run_sweep(spec: SweepSpec, event_bus: Optional[EventBus] = None,
              n_jobs: Optional[int] = None) -> List[SweepRow]:
    """
    在扫描网格上计算速率

    网格点并行求值，结果按扫描顺序返回；预算不足的 QCI 单元记为 None。

    Args:
        spec: 扫描描述
        event_bus: 可选事件总线
        n_jobs: 线程数，缺省取配置值

    Returns:
        按扫描顺序的结果行

    Raises:
        ValidationError: 扫描点配置无效
        UnsupportedConfigurationError: 所选方案不支持某个扫描点（如 QCI 且 K > M）
    """
    if n_jobs is None:
        n_jobs = Config().get_sweep_n_jobs()
    strategies = SchemeFactory.create_all(spec.schemes, spec.qci_bits)
    # 先构造全部扫描点并检查支持性，出错时不做任何计算
    configs = [spec.config_at(value) for value in spec.values]
    for cfg in configs:
        for strategy in strategies:
            strategy.check_supported(cfg)

    logger.info(f"开始扫描 {spec.axis.value}: {len(configs)} 个点, 方案 {[s.label for s in strategies]}")
    publish_if(event_bus, EventType.SWEEP_STARTED, axis=spec.axis.value, points=len(configs))
    tasks = [delayed(_evaluate_point)(spec, strategies, index, value, cfg, event_bus)
             for index, (value, cfg) in enumerate(zip(spec.values, configs))]
    if n_jobs == 1:
        rows = [task[0](*task[1], **task[2]) for task in tasks]
    else:
        rows = Parallel(n_jobs=n_jobs, prefer="threads")(tasks)
    publish_if(event_bus, EventType.SWEEP_FINISHED, axis=spec.axis.value, points=len(rows))
    logger.info(f"扫描完成: {len(rows)} 行")
    return list(rows)
