# This Python file uses the following encoding: utf-8

"""
参数扫描数据结构 - 扫描描述与结果行
"""

import math
from dataclasses import dataclass, field
from typing import Dict, Any, List, Optional, Tuple
from ..core.enums import SweepAxis, Scheme
from ..utils.exceptions import ValidationError
from .channel import ChannelConfig


@dataclass(frozen=True)
class SweepSpec:
    """
    扫描描述

    Args:
        axis: 扫描轴
        values: 扫描取值，非空且严格递增
        fixed: 非扫描参数
        schemes: 参与计算的方案
        qci_bits: QCI 每个 B 对应 J = 2^B 个电平
        mc_samples: 大于 0 时附加蒙特卡洛列
        seed: 随机种子
    """

    axis: SweepAxis
    values: Tuple[float, ...]
    fixed: ChannelConfig
    schemes: Tuple[Scheme, ...] = (Scheme.UB, Scheme.QCI, Scheme.MMSE)
    qci_bits: Tuple[int, ...] = (4, 8)
    mc_samples: int = 0
    seed: int = 0

    def __post_init__(self):
        if not self.values:
            raise ValidationError("扫描取值不能为空", field="values")
        if any(not math.isfinite(v) for v in self.values):
            raise ValidationError("扫描取值必须为有限数", field="values")
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise ValidationError("扫描取值必须严格递增", field="values")
        if self.axis is SweepAxis.ANTENNAS_M and any(v < 1 or int(v) != v for v in self.values):
            raise ValidationError("天线数扫描取值必须为正整数", field="values")
        if self.axis is SweepAxis.CAPACITY_BITS and any(v < 0 for v in self.values):
            raise ValidationError("瓶颈容量不能为负", field="values")
        if not self.schemes:
            raise ValidationError("至少选择一个方案", field="schemes")
        if Scheme.QCI in self.schemes and (not self.qci_bits or any(b < 1 for b in self.qci_bits)):
            raise ValidationError("QCI 量化比特数必须为正整数", field="qci_bits")
        if self.mc_samples < 0:
            raise ValidationError("样本数不能为负", field="mc_samples")

    def config_at(self, value: float) -> ChannelConfig:
        """扫描点对应的信道配置"""
        if self.axis is SweepAxis.SNR_DB:
            return self.fixed.with_snr_db(value)
        if self.axis is SweepAxis.CAPACITY_BITS:
            return self.fixed.with_capacity(value)
        return self.fixed.with_antennas(int(value))

    def column_names(self) -> List[str]:
        """CSV 列名（与 SweepRow.to_record 对应）"""
        names = [self.axis.value]
        if Scheme.UB in self.schemes:
            names.append("r_ub")
        if Scheme.QCI in self.schemes:
            names.extend(f"r_qci_b{b}" for b in self.qci_bits)
        if Scheme.MMSE in self.schemes:
            names.append("r_mmse")
        names.append("limit_capacity")
        if self.mc_samples > 0:
            names.extend(["mc_capacity", "mc_ub"])
        return names


@dataclass
class SweepRow:
    """
    扫描结果的一行

    不可行的 QCI 单元为 None，输出时写作 NA。
    """

    axis_value: float
    r_ub: Optional[float] = None
    r_qci: Dict[int, Optional[float]] = field(default_factory=dict)
    r_mmse: Optional[float] = None
    limits: Dict[str, float] = field(default_factory=dict)
    oracle: Dict[str, float] = field(default_factory=dict)

    def to_record(self, spec: SweepSpec) -> Dict[str, Any]:
        """按列名展开为记录"""
        record: Dict[str, Any] = {spec.axis.value: self.axis_value}
        if Scheme.UB in spec.schemes:
            record["r_ub"] = self.r_ub
        if Scheme.QCI in spec.schemes:
            for b in spec.qci_bits:
                record[f"r_qci_b{b}"] = self.r_qci.get(b)
        if Scheme.MMSE in spec.schemes:
            record["r_mmse"] = self.r_mmse
        record["limit_capacity"] = self.limits.get("capacity")
        if spec.mc_samples > 0:
            record["mc_capacity"] = self.oracle.get("capacity")
            record["mc_ub"] = self.oracle.get("upper_bound")
        return record

    def series(self) -> Dict[str, Optional[float]]:
        """作图用的方案曲线值"""
        data: Dict[str, Optional[float]] = {}
        if self.r_ub is not None:
            data["ub"] = self.r_ub
        for b, value in sorted(self.r_qci.items()):
            data[f"qci-B{b}"] = value
        if self.r_mmse is not None:
            data["mmse"] = self.r_mmse
        return data
