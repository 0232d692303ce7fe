"""
数据模型测试 - 信道配置、量化网格与扫描描述
"""

import math
import pytest
from ib_relay.core import OracleLevel, Scheme, SweepAxis
from ib_relay.models import (
    ChannelConfig, ChannelDims, QuantGrid, QciAllocation, SweepRow, SweepSpec, entropy_bits
)
from ib_relay.utils.exceptions import ValidationError


class TestChannel:

    def test_dims(self):
        dims = ChannelDims(2, 4)
        assert (dims.t, dims.s) == (2, 4)
        assert ChannelDims(4, 2).t == 2
        assert dims.to_dict() == {"k": 2, "m": 4, "t": 2, "s": 4}

    @pytest.mark.parametrize("k, m", [(0, 2), (2, -1), (1.5, 2), (True, 2)])
    def test_invalid_dims(self, k, m):
        with pytest.raises(ValidationError):
            ChannelDims(k, m)

    def test_snr_conversion(self):
        cfg = ChannelConfig.from_snr_db(2, 2, 20.0, 8.0)
        assert cfg.sigma2 == pytest.approx(0.01)
        assert cfg.snr == pytest.approx(100.0)
        assert cfg.snr_db == pytest.approx(20.0)
        assert cfg.with_snr_db(0.0).sigma2 == pytest.approx(1.0)
        assert cfg.with_capacity(3.0).capacity_bits == 3.0
        assert cfg.with_antennas(8).dims == ChannelDims(2, 8)

    @pytest.mark.parametrize("sigma2, c", [(0.0, 1.0), (math.inf, 1.0), (1.0, -1.0), (1.0, math.nan)])
    def test_invalid_config(self, sigma2, c):
        with pytest.raises(ValidationError):
            ChannelConfig(ChannelDims(1, 1), sigma2, c)


class TestQuantGrid:

    def test_entropy(self):
        assert entropy_bits([0.5, 0.5]) == pytest.approx(1.0)
        assert entropy_bits([1.0, 0.0]) == 0.0

    def test_level_snrs(self):
        grid = QuantGrid.from_pmf([0.5, 2.0], [0.25, 0.25, 0.5])
        assert grid.levels == 3
        assert grid.level_snrs == (2.0, 0.5, 0.0)
        assert grid.entropy_bits == pytest.approx(1.5)

    @pytest.mark.parametrize("points, pmf", [
        ([1.0], [1.0]),
        ([2.0, 1.0], [0.3, 0.3, 0.4]),
        ([0.0], [0.5, 0.5]),
        ([1.0], [0.7, 0.7]),
        ([1.0], [1.2, -0.2]),
    ])
    def test_invalid_grid(self, points, pmf):
        with pytest.raises(ValidationError):
            QuantGrid.from_pmf(points, pmf)

    def test_allocation(self):
        grid = QuantGrid.from_pmf([1.0], [0.5, 0.5])
        alloc = QciAllocation(-1.0, (1.0, 0.0), grid.level_snrs, 1)
        assert alloc.nu == 0.5
        assert alloc.spent_bits(grid, 2) == pytest.approx(1.0)
        assert alloc.to_dict()["active_levels"] == 1


class TestSweepSpec:

    def fixed(self):
        return ChannelConfig.from_snr_db(2, 2, 10.0, 40.0)

    def test_columns(self):
        spec = SweepSpec(SweepAxis.SNR_DB, (0.0, 5.0), self.fixed(), qci_bits=(4, 8), mc_samples=10)
        assert spec.column_names() == ["snr_db", "r_ub", "r_qci_b4", "r_qci_b8", "r_mmse",
                                       "limit_capacity", "mc_capacity", "mc_ub"]
        only_ub = SweepSpec(SweepAxis.SNR_DB, (0.0,), self.fixed(), schemes=(Scheme.UB,))
        assert only_ub.column_names() == ["snr_db", "r_ub", "limit_capacity"]

    def test_config_at(self):
        fixed = self.fixed()
        assert SweepSpec(SweepAxis.SNR_DB, (30.0,), fixed).config_at(30.0).snr_db == pytest.approx(30.0)
        assert SweepSpec(SweepAxis.CAPACITY_BITS, (5.0,), fixed).config_at(5.0).capacity_bits == 5.0
        assert SweepSpec(SweepAxis.ANTENNAS_M, (6.0,), fixed).config_at(6.0).dims.m == 6

    @pytest.mark.parametrize("axis, values, options", [
        (SweepAxis.SNR_DB, (), {}),
        (SweepAxis.SNR_DB, (5.0, 0.0), {}),
        (SweepAxis.SNR_DB, (0.0, math.inf), {}),
        (SweepAxis.ANTENNAS_M, (2.5,), {}),
        (SweepAxis.CAPACITY_BITS, (-1.0,), {}),
        (SweepAxis.SNR_DB, (0.0,), {"schemes": ()}),
        (SweepAxis.SNR_DB, (0.0,), {"qci_bits": (0,)}),
        (SweepAxis.SNR_DB, (0.0,), {"mc_samples": -1}),
    ])
    def test_invalid_spec(self, axis, values, options):
        with pytest.raises(ValidationError):
            SweepSpec(axis, values, self.fixed(), **options)

    def test_row_record_and_series(self):
        spec = SweepSpec(SweepAxis.CAPACITY_BITS, (4.0,), self.fixed(), qci_bits=(2, 4))
        row = SweepRow(4.0, r_ub=3.0, r_qci={2: None, 4: 1.0}, r_mmse=0.5, limits={"capacity": 5.0})
        assert row.to_record(spec) == {"capacity_bits": 4.0, "r_ub": 3.0, "r_qci_b2": None,
                                       "r_qci_b4": 1.0, "r_mmse": 0.5, "limit_capacity": 5.0}
        assert row.series() == {"ub": 3.0, "qci-B2": None, "qci-B4": 1.0, "mmse": 0.5}


def test_oracle_level_from_name():
    assert OracleLevel.from_name(" Full ") is OracleLevel.FULL
    with pytest.raises(ValueError):
        OracleLevel.from_name("medium")
