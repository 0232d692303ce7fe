# This Python file uses the following encoding: utf-8

"""
QCI 电平间注水
"""

import math
from typing import List
from ..models.quant_grid import QuantGrid, QciAllocation
from ..utils.config import Config
from ..utils.logger import get_logger
from ..utils.exceptions import InfeasibleBudgetError, ValidationError

logger = get_logger(__name__)


def available_budget(grid: QuantGrid, k: int, c_total_bits: float) -> float:
    """
    扣除信道状态反馈后的压缩预算 C - K·H0

    Raises:
        InfeasibleBudgetError: 预算不超过反馈开销
    """
    feedback = k * grid.entropy_bits
    budget = c_total_bits - feedback
    if budget <= Config().get_feasibility_margin():
        error_msg = (f"瓶颈预算 {c_total_bits:g} 比特不足以支付信道状态反馈 "
                     f"K·H0 = {feedback:g} 比特")
        logger.error(error_msg)
        raise InfeasibleBudgetError(error_msg, budget_bits=c_total_bits, feedback_bits=feedback)
    return budget


def qci_waterfill(grid: QuantGrid, k: int, c_total_bits: float) -> QciAllocation:
    """
    活跃集迭代求水位：依次尝试 l = 1, 2, …，直到 ρ_{l+1} ≤ ν

    非均匀概率时以 K·P_j 作为各级权重；零概率电平跳过。

    Args:
        grid: 量化网格
        k: 发射维度 K
        c_total_bits: 总瓶颈容量 C

    Returns:
        每级比特分配

    Raises:
        InfeasibleBudgetError: C ≤ K·H0
    """
    if k < 1:
        raise ValidationError(f"K 必须为正整数: {k}", field="k")
    budget = available_budget(grid, k, c_total_bits)
    snrs = grid.level_snrs
    candidates: List[int] = [j for j in range(grid.levels - 1) if grid.pmf[j] > 0.0]
    if not candidates:
        raise ValidationError("网格没有正概率的有限电平", field="grid")

    weight_sum = 0.0
    weighted_log_snr = 0.0
    log2_nu = math.nan
    active = 0
    for position, j in enumerate(candidates):
        weight = k * grid.pmf[j]
        weight_sum += weight
        weighted_log_snr += weight * math.log2(snrs[j])
        log2_nu = (weighted_log_snr - budget) / weight_sum
        active = position + 1
        is_last = position + 1 == len(candidates)
        if is_last or math.log2(snrs[candidates[position + 1]]) <= log2_nu:
            break

    c = tuple(max(0.0, math.log2(rho) - log2_nu) if rho > 0 else 0.0 for rho in snrs)
    logger.debug(f"QCI 注水: l={active}, log2ν={log2_nu:.6f}, c={c}")
    return QciAllocation(log2_nu, c, snrs, active)
