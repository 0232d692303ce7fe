"""
配置、日志与异常测试
"""

import json
import logging
import pytest
from ib_relay.core import DofConvention, QuadratureKind
from ib_relay.utils.config import Config
from ib_relay.utils.logger import Logger, get_logger
from ib_relay.utils.exceptions import ConfigError, IbRelayError, QuadratureError, ValidationError


class TestConfig:

    def test_singleton(self):
        assert Config() is Config()

    def test_defaults(self, default_config):
        assert default_config.get_quadrature_kind() is QuadratureKind.ADAPTIVE_INTERVAL
        assert default_config.get_default_dof_convention() is DofConvention.COMPLEX_GAMMA
        assert default_config.get_oracle_samples(False) == 10_000
        assert default_config.get_oracle_samples(True) == 100_000
        assert default_config.get_sweep_n_jobs() == 1
        assert default_config.get("logging.level") == "INFO"

    def test_get_and_set(self, default_config):
        assert default_config.get("numerics.missing", 5) == 5
        assert default_config.get("numerics.quadrature.deeper") is None
        default_config.set("custom.nested.value", 3)
        assert default_config.get("custom.nested.value") == 3
        default_config.set("oracle.n_jobs", 4)
        assert default_config.get_oracle_n_jobs() == 4

    def test_reset_and_snapshot(self, default_config):
        default_config.set("sweep.significant_digits", 3)
        snapshot = default_config.snapshot()
        snapshot["sweep"]["significant_digits"] = 9
        assert default_config.get_significant_digits() == 3
        default_config.reset_to_default()
        assert default_config.get_significant_digits() == 6

    def test_invalid_enum_values(self, default_config):
        default_config.set("numerics.quadrature", "simpson")
        with pytest.raises(ConfigError):
            default_config.get_quadrature_kind()
        default_config.set("spectra.default_dof_convention", "real")
        with pytest.raises(ConfigError):
            default_config.get_default_dof_convention()

    def test_save_and_merge(self, default_config, tmp_path, monkeypatch):
        path = tmp_path / "ib_relay.json"
        monkeypatch.setattr(default_config, "config_file", str(path))
        default_config.set("oracle.chunk_size", 123)
        assert default_config.save_config()
        saved = json.loads(path.read_text(encoding="utf-8"))
        assert saved["oracle"]["chunk_size"] == 123
        default_config.reset_to_default()
        default_config._merge_config({"oracle": {"chunk_size": 77}})
        assert default_config.get("oracle.chunk_size") == 77
        assert default_config.get("oracle.n_jobs") == 1


class TestLogger:

    def test_singleton_and_level(self):
        assert Logger() is Logger()
        log = get_logger("ib_relay.test")
        Logger().set_level("warning")
        assert logging.getLogger().level == logging.WARNING
        Logger().set_level("info")
        assert not log.isEnabledFor(logging.DEBUG)
        assert logging.getLogger("matplotlib").level == logging.WARNING


class TestExceptions:

    def test_message_rendering(self):
        error = ValidationError("坏值", field="k")
        assert isinstance(error, IbRelayError)
        assert error.field == "k"
        assert str(error).endswith("坏值")
        assert str(IbRelayError("plain")) == "plain"
        assert str(IbRelayError("coded", "E1")) == "[E1] coded"

    def test_quadrature_error_keeps_estimates(self):
        error = QuadratureError("不收敛", estimates=[1.0, 2.0])
        assert tuple(error.estimates) == (1.0, 2.0)
