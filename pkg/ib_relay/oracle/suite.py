# This Python file uses the following encoding: utf-8

"""
蒙特卡洛校验套件

quick 级别每项 10⁴ 个样本，full 级别 10⁵ 个样本（可由配置覆盖）。
单项抛出的库异常记为该项失败，不中断其余校验。
"""

from typing import Callable, List, Optional, Tuple
from ..core.enums import OracleLevel
from ..events import EventBus, EventType, publish_if
from ..models.channel import ChannelConfig, ChannelDims
from ..qci.grid import quantile_grid
from ..spectra.noise_level import NoiseLevelDensity
from ..utils.config import Config
from ..utils.logger import get_logger
from ..utils.exceptions import IbRelayError
from .checks import (
    check_channel_statistics, empirical_eig_check, check_noise_levels,
    check_capacity, check_upper_bound, check_mmse_ratio
)
from .covariance import check_covariance_identities
from .matrix_inequalities import check_matrix_inequalities
from .qci_chain import simulate_qci_chain
from .reports import CheckReport, OracleSuiteReport

logger = get_logger(__name__)

EIG_DIMS = ((1, 1), (1, 2), (2, 2), (2, 4))
NOISE_DIMS = ((1, 2), (2, 2), (2, 4))
CAPACITY_SNRS_DB = (0.0, 10.0, 20.0)
COVARIANCE_DIMS = ((2, 2), (2, 4), (4, 2))
MATRIX_ORDERS = (1, 2, 4, 8)
MATRIX_TRIALS = 1000
SUITE_SNR_DB = 10.0
SUITE_CAPACITY_BITS = 4.0
QCI_CHAIN_LEVELS = 4


def _planned_checks(n: int, seed: int) -> List[Tuple[str, Callable[[], CheckReport]]]:
    """(名称, 惰性校验) 列表，顺序即报告顺序"""
    sigma2 = ChannelConfig.from_snr_db(1, 1, SUITE_SNR_DB, 0.0).sigma2
    plan = [("channel_statistics", lambda: check_channel_statistics(ChannelDims(2, 4), n, seed))]
    for k, m in EIG_DIMS:
        plan.append((f"eig_density[K={k},M={m}]",
                     lambda k=k, m=m: empirical_eig_check(ChannelDims(k, m), n, seed)))
    for k, m in NOISE_DIMS:
        plan.append((f"noise_levels[K={k},M={m}]",
                     lambda k=k, m=m: check_noise_levels(ChannelDims(k, m), sigma2, n, seed)))
    for snr_db in CAPACITY_SNRS_DB:
        cfg = ChannelConfig.from_snr_db(2, 2, snr_db, SUITE_CAPACITY_BITS)
        plan.append((f"capacity[snr={snr_db:g}dB]", lambda cfg=cfg: check_capacity(cfg, n, seed)))
    ub_cfg = ChannelConfig.from_snr_db(2, 2, SUITE_SNR_DB, SUITE_CAPACITY_BITS)
    plan.append(("upper_bound", lambda: check_upper_bound(ub_cfg, n, seed)))
    plan.append(("mmse_ratio", lambda: check_mmse_ratio(ub_cfg, n, seed)))
    for k, m in COVARIANCE_DIMS:
        plan.append((f"covariance[K={k},M={m}]",
                     lambda k=k, m=m: check_covariance_identities(ChannelDims(k, m), sigma2, n, seed)))

    def qci_chain() -> CheckReport:
        dims = ChannelDims(2, 2)
        grid = quantile_grid(NoiseLevelDensity(dims, sigma2), QCI_CHAIN_LEVELS)
        return simulate_qci_chain(dims, sigma2, grid, n, seed)

    plan.append(("qci_chain", qci_chain))
    for k in MATRIX_ORDERS:
        plan.append((f"matrix_inequalities[k={k}]",
                     lambda k=k: check_matrix_inequalities(k, MATRIX_TRIALS, seed)))
    return plan


def run_oracle_suite(level: OracleLevel = OracleLevel.QUICK, seed: int = 0,
                     event_bus: Optional[EventBus] = None,
                     only: Optional[str] = None) -> OracleSuiteReport:
    """
    运行全部蒙特卡洛校验

    Args:
        level: 校验级别
        seed: 根种子；相同种子与级别得到逐字节相同的报告
        event_bus: 可选事件总线，每项完成后发布 ORACLE_CHECK_FINISHED
        only: 仅运行名称以此开头的校验

    Returns:
        汇总报告
    """
    n = Config().get_oracle_samples(level == OracleLevel.FULL)
    report = OracleSuiteReport(level.name.lower(), int(seed))
    for name, check in _planned_checks(n, seed):
        if only is not None and not name.startswith(only):
            continue
        logger.info(f"开始校验: {name} (n={n})")
        try:
            result = check()
        except IbRelayError as e:
            logger.error(f"校验 {name} 出错: {e}")
            result = CheckReport(name, n_samples=n)
            result.fail(str(e))
        report.checks.append(result)
        if not result.passed:
            logger.warning(f"校验失败: {result.name}: {'; '.join(result.messages)}")
        publish_if(event_bus, EventType.ORACLE_CHECK_FINISHED, name=result.name, passed=result.passed)

    publish_if(event_bus, EventType.ORACLE_SUITE_FINISHED,
               passed=report.passed, failed=report.failed_checks)
    logger.info(f"校验完成: {len(report.checks) - len(report.failed_checks)}/{len(report.checks)} 通过")
    return report
