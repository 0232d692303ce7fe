"""
oracle 测试 - 随机数流、采样、矩阵不等式与校验套件
"""

import numpy as np
import pytest
from ib_relay.core import OracleLevel
from ib_relay.events import EventBus, EventType
from ib_relay.bounds import capacity
from ib_relay.models import ChannelConfig, ChannelDims
from ib_relay.oracle import (
    stream_generator, map_chunks, mean_and_stderr, complex_gaussian, sample_channel, gram,
    pooled_eigenvalues, check_channel_statistics, empirical_capacity, check_matrix_inequalities,
    log_det_gap, trace_gap, majorization_gap, random_positive_definite, expected_covariance_scales,
    run_oracle_suite, CheckReport
)
from ib_relay.oracle import suite
from ib_relay.utils.exceptions import ValidationError


class TestStreams:

    def test_same_stream_same_draws(self):
        a = stream_generator(7, 3, 1).standard_normal(5)
        b = stream_generator(7, 3, 1).standard_normal(5)
        np.testing.assert_array_equal(a, b)

    def test_streams_are_distinct(self):
        a = stream_generator(7, 3, 1).standard_normal(5)
        b = stream_generator(7, 3, 2).standard_normal(5)
        c = stream_generator(8, 3, 1).standard_normal(5)
        assert not np.allclose(a, b)
        assert not np.allclose(a, c)

    def test_chunks_independent_of_thread_count(self, default_config):
        default_config.set("oracle.chunk_size", 100)

        def task(rng, count):
            return rng.standard_normal(count)

        serial = map_chunks(task, 1000, 5, 99, n_jobs=1)
        parallel = map_chunks(task, 1000, 5, 99, n_jobs=2)
        assert len(serial) == 10
        for a, b in zip(serial, parallel):
            np.testing.assert_array_equal(a, b)

    def test_mean_and_stderr(self):
        mean, stderr = mean_and_stderr([np.array([1.0, 2.0]), np.array([3.0])])
        assert mean == pytest.approx(2.0)
        assert stderr == pytest.approx(np.std([1.0, 2.0, 3.0], ddof=1) / np.sqrt(3))
        assert np.isnan(mean_and_stderr([np.array([])])[0])


class TestSampling:

    def test_complex_gaussian_moments(self):
        z = complex_gaussian(stream_generator(0, 1), (100_000,))
        assert np.mean(np.abs(z) ** 2) == pytest.approx(1.0, abs=0.02)
        assert np.var(z.real) == pytest.approx(0.5, abs=0.01)
        assert abs(np.mean(z * z)) < 0.02

    def test_sample_channel_reproducible(self):
        dims = ChannelDims(2, 4)
        a = sample_channel(dims, stream=3, seed=1)
        b = sample_channel(dims, stream=3, seed=1)
        assert a.h.shape == (4, 2)
        np.testing.assert_array_equal(a.h, b.h)

    @pytest.mark.parametrize("k, m", [(2, 4), (4, 2)])
    def test_gram_is_t_by_t(self, k, m):
        h = complex_gaussian(stream_generator(0, 2), (3, m, k))
        assert gram(h).shape == (3, min(k, m), min(k, m))
        values = pooled_eigenvalues(h)
        assert values.shape == (3 * min(k, m),)
        assert np.all(values > 0)


class TestChecks:

    def test_channel_statistics(self):
        report = check_channel_statistics(ChannelDims(2, 4), 10_000, seed=0)
        assert report.metrics["mean_power"] == pytest.approx(1.0, abs=0.02)
        assert report.metrics["mean_trace"] == pytest.approx(8.0, rel=0.02)

    def test_empirical_capacity(self):
        cfg = ChannelConfig.from_snr_db(2, 2, 10.0, 4.0)
        assert empirical_capacity(cfg, 20_000, seed=0) == pytest.approx(capacity(cfg), rel=0.02)

    def test_covariance_scales(self):
        scales = expected_covariance_scales(ChannelDims(2, 4), 0.1)
        assert scales["FhH"] == scales["xbar"]
        assert 0.0 < scales["FhHHhF"] < scales["FhH"] < 1.0

    def test_sample_count_validation(self):
        with pytest.raises(ValidationError):
            check_channel_statistics(ChannelDims(2, 2), 0)


class TestMatrixInequalities:

    def test_diagonal_matrices_have_zero_gaps(self):
        w = np.array([np.diag([1.0, 2.0, 5.0]), np.diag([0.3, 0.3, 4.0])]).astype(complex)
        np.testing.assert_allclose(log_det_gap(w), 0.0, atol=1e-12)
        np.testing.assert_allclose(trace_gap(w), 0.0, atol=1e-12)
        np.testing.assert_allclose(majorization_gap(w), 0.0, atol=1e-12)

    def test_random_matrices_satisfy_inequalities(self):
        w = random_positive_definite(stream_generator(0, 1), 4, 200)
        assert np.all(log_det_gap(w) >= -1e-9)
        assert np.all(trace_gap(w) >= -1e-9)
        assert np.all(majorization_gap(w) >= -1e-9)

    @pytest.mark.parametrize("k", [1, 2, 4])
    def test_check_passes(self, k):
        report = check_matrix_inequalities(k, 500, seed=3)
        assert report.passed
        assert report.name == f"matrix_inequalities[k={k}]"
        assert report.metrics["log_det_violations"] == 0

    def test_invalid_arguments(self):
        with pytest.raises(ValidationError):
            check_matrix_inequalities(0, 10)


class TestReports:

    def test_expect_records_failure(self):
        report = CheckReport("demo", n_samples=3)
        assert report.expect(True, "ok")
        assert not report.expect(False, "broken")
        assert not report.passed
        assert "! broken" in report.to_text()
        assert report.to_records()[0] == {"check": "demo", "key": "passed", "value": "false"}


class TestSuite:

    def test_subset_is_deterministic(self):
        first = run_oracle_suite(OracleLevel.QUICK, seed=1, only="matrix")
        second = run_oracle_suite(OracleLevel.QUICK, seed=1, only="matrix")
        assert len(first.checks) == len(suite.MATRIX_ORDERS)
        assert first.to_text() == second.to_text()
        assert first.to_csv().startswith("check,key,value\n")
        assert first.exit_status == 0

    def test_events_published(self):
        bus = EventBus()
        seen = []
        bus.subscribe(EventType.ORACLE_CHECK_FINISHED, lambda e: seen.append(e.data["name"]))
        finished = []
        bus.subscribe(EventType.ORACLE_SUITE_FINISHED, lambda e: finished.append(e.data))
        run_oracle_suite(OracleLevel.QUICK, seed=0, event_bus=bus, only="matrix_inequalities[k=1]")
        assert seen == ["matrix_inequalities[k=1]"]
        assert finished == [{"passed": True, "failed": []}]

    def test_library_error_becomes_failed_check(self, monkeypatch):
        def broken(k, trials, seed):
            raise ValidationError("坏参数", field="k")

        monkeypatch.setattr(suite, "check_matrix_inequalities", broken)
        report = run_oracle_suite(OracleLevel.QUICK, seed=0, only="matrix_inequalities[k=2]")
        assert not report.passed
        assert report.exit_status == 1
        assert report.failed_checks == ["matrix_inequalities[k=2]"]

    @pytest.mark.slow
    def test_quick_suite_passes(self):
        report = run_oracle_suite(OracleLevel.QUICK, seed=0)
        assert report.passed, report.to_text()
        for k, m in suite.NOISE_DIMS:
            fitted = report.get(f"noise_levels[K={k},M={m}]").metrics["fitted_convention"]
            assert fitted == "complex-gamma"

    @pytest.mark.slow
    def test_full_suite_meets_acceptance(self):
        report = run_oracle_suite(OracleLevel.FULL, seed=0)
        assert report.passed, report.to_text()
        for check in report.checks:
            if check.name.startswith("matrix_inequalities"):
                assert check.n_samples == suite.MATRIX_TRIALS
                continue
            assert check.n_samples == 100_000, check.name
            metrics = check.metrics
            if check.name.startswith("eig_density"):
                assert metrics["p_value"] >= 1e-4
            elif check.name.startswith("noise_levels"):
                assert metrics["fitted_convention"] == "complex-gamma"
                assert metrics["complex-gamma.p_value"] >= 1e-4
            elif check.name.startswith("capacity"):
                assert abs(metrics["empirical"] - metrics["closed_form"]) <= 0.01 * metrics["closed_form"]
