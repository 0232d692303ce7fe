# This Python file uses the following encoding: utf-8

"""
预置扫描 - 三组典型曲线的扫描描述
"""

import math
from typing import Tuple
import numpy as np
from ..core import SweepAxis
from ..models import ChannelConfig, SweepSpec
from ..utils.exceptions import ValidationError

FIGURE_QCI_BITS = (4, 8)
FIGURE_ANTENNAS = (2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64)


def axis_values(start: float, stop: float, step: float) -> Tuple[float, ...]:
    """
    含端点的等步长网格

    Args:
        start: 起点
        stop: 终点（落在网格上时包含）
        step: 步长（> 0）

    Returns:
        扫描取值
    """
    if not (step > 0) or not math.isfinite(step):
        raise ValidationError(f"步长必须为正: {step}", field="step")
    if stop < start:
        raise ValidationError(f"终点小于起点: {start} > {stop}", field="to")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    # 消除累加误差，如 0.1 步长
    return tuple(float(v) for v in np.round(start + step * np.arange(count), 12))


def figure_spec(figure: int) -> SweepSpec:
    """
    预置扫描描述

    1: 速率随信噪比 (0..50 dB)，K = M = 2，C = 40
    2: 速率随瓶颈容量 (0..100 bit)，K = M = 4，ρ = 40 dB
    3: 速率随中继天线数，K = 2，ρ = 40 dB，C = 40
    """
    if figure == 1:
        return SweepSpec(SweepAxis.SNR_DB, axis_values(0.0, 50.0, 5.0),
                         ChannelConfig.from_snr_db(2, 2, 0.0, 40.0), qci_bits=FIGURE_QCI_BITS)
    if figure == 2:
        return SweepSpec(SweepAxis.CAPACITY_BITS, axis_values(0.0, 100.0, 5.0),
                         ChannelConfig.from_snr_db(4, 4, 40.0, 0.0), qci_bits=FIGURE_QCI_BITS)
    if figure == 3:
        return SweepSpec(SweepAxis.ANTENNAS_M, tuple(float(m) for m in FIGURE_ANTENNAS),
                         ChannelConfig.from_snr_db(2, 2, 40.0, 40.0), qci_bits=FIGURE_QCI_BITS)
    raise ValidationError(f"没有预置扫描 {figure}（可选 1、2、3）", field="figure")
