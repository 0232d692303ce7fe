"""
速率策略与工厂测试
"""

import pytest
from ib_relay.bounds import upper_bound
from ib_relay.core import Scheme
from ib_relay.models import ChannelConfig
from ib_relay.schemes import (
    BaseBoundStrategy, MmseStrategy, QciStrategy, SchemeFactory, UpperBoundStrategy
)
from ib_relay.utils.exceptions import UnsupportedConfigurationError, ValidationError


class TestStrategies:

    def test_upper_bound(self):
        cfg = ChannelConfig.from_snr_db(2, 2, 10.0, 8.0)
        strategy = UpperBoundStrategy()
        assert strategy.label == "ub"
        assert strategy.evaluate(cfg) == pytest.approx(upper_bound(cfg))
        assert set(strategy.limits(cfg)) == {"limit_large_M", "limit_large_snr", "limit_large_C"}

    def test_qci_label_and_infeasibility(self):
        strategy = QciStrategy(bits=4)
        assert strategy.label == "qci-B4"
        assert strategy.levels == 16
        assert strategy.evaluate(ChannelConfig.from_snr_db(2, 2, 10.0, 8.0)) is None
        assert strategy.evaluate(ChannelConfig.from_snr_db(2, 2, 10.0, 20.0)) > 0.0

    @pytest.mark.parametrize("bits", [0, -1, 2.5])
    def test_qci_invalid_bits(self, bits):
        with pytest.raises(ValidationError):
            QciStrategy(bits=bits)

    def test_qci_unsupported(self):
        with pytest.raises(UnsupportedConfigurationError):
            QciStrategy().check_supported(ChannelConfig.from_snr_db(4, 2, 10.0, 40.0))
        QciStrategy().check_supported(ChannelConfig.from_snr_db(2, 4, 10.0, 40.0))

    def test_mmse_zero_budget(self):
        strategy = MmseStrategy()
        assert strategy.evaluate(ChannelConfig.from_snr_db(2, 2, 10.0, 0.0)) == 0.0
        assert strategy.limits(ChannelConfig.from_snr_db(2, 2, 10.0, 5.0))["limit_large_M_or_snr"] == 5.0


class TestSchemeFactory:

    def test_create(self):
        assert isinstance(SchemeFactory.create(Scheme.UB), UpperBoundStrategy)
        assert SchemeFactory.create(Scheme.QCI, bits=8).bits == 8
        assert SchemeFactory.is_supported_type(Scheme.MMSE)
        assert set(SchemeFactory.get_supported_types()) == set(Scheme)

    def test_create_all_expands_qci(self):
        strategies = SchemeFactory.create_all((Scheme.UB, Scheme.QCI, Scheme.MMSE), (4, 8))
        assert [s.label for s in strategies] == ["ub", "qci-B4", "qci-B8", "mmse"]

    def test_unknown_scheme(self, monkeypatch):
        monkeypatch.setattr(SchemeFactory, "_strategies", {Scheme.UB: UpperBoundStrategy})
        with pytest.raises(ValidationError):
            SchemeFactory.create(Scheme.MMSE)

    def test_register_strategy(self, monkeypatch):
        monkeypatch.setattr(SchemeFactory, "_strategies", None)

        class ConstantStrategy(BaseBoundStrategy):
            scheme = Scheme.MMSE

            def _evaluate_impl(self, cfg):
                return 1.0

            def limits(self, cfg):
                return {}

        SchemeFactory.register_strategy(Scheme.MMSE, ConstantStrategy)
        strategy = SchemeFactory.create(Scheme.MMSE)
        assert strategy.evaluate(ChannelConfig.from_snr_db(1, 1, 0.0, 1.0)) == 1.0
