"""
spectra 测试 - 特征值密度与噪声电平密度
"""

import math
import numpy as np
import pytest
from ib_relay.core import DofConvention
from ib_relay.mathcore import gauss_laguerre_rule
from ib_relay.models import ChannelDims
from ib_relay.spectra import (
    EigDensity, eig_pdf, eig_cdf, eig_breakpoints, eig_expectation,
    NoiseLevelDensity, noise_level_pdf, noise_level_cdf, noise_level_expectation,
    noise_level_quantile, noise_level_quantiles, level_masses
)
from ib_relay.utils.exceptions import UnsupportedConfigurationError, ValidationError


def density(k, m):
    return EigDensity(ChannelDims(k, m))


class TestEigDensity:

    def test_reference_values(self):
        assert eig_pdf(density(1, 1), 1.0) == pytest.approx(math.exp(-1.0))
        assert eig_pdf(density(2, 2), 1.0) == pytest.approx(math.exp(-1.0) / 2.0, rel=1e-12)
        assert eig_pdf(density(2, 4), 0.0) == 0.0

    @pytest.mark.parametrize("m", [1, 2, 8])
    def test_single_antenna_is_gamma(self, m):
        # T = 1: f(λ) = λ^{S-1} e^{-λ} / (S-1)!
        lam = np.linspace(0.0, 30.0, 100)
        expected = lam ** (m - 1) * np.exp(-lam) / math.factorial(m - 1)
        assert np.allclose(eig_pdf(density(1, m), lam), expected, rtol=1e-10, atol=1e-10)
        assert np.allclose(eig_pdf(density(m, 1), lam), expected, rtol=1e-10, atol=1e-10)

    @pytest.mark.parametrize("k, m", [(1, 1), (2, 2), (2, 4), (3, 5), (4, 2), (4, 4), (8, 8), (2, 64)])
    def test_normalization_and_mean(self, k, m):
        d = density(k, m)
        assert eig_expectation(d, lambda x: 1.0) == pytest.approx(1.0, abs=1e-8)
        assert eig_expectation(d, lambda x: x) == pytest.approx(float(max(k, m)), rel=1e-8)

    def test_large_relay_array(self):
        d = density(2, 256)
        assert eig_expectation(d, lambda x: 1.0) == pytest.approx(1.0, abs=1e-8)
        assert eig_expectation(d, lambda x: x) == pytest.approx(256.0, rel=1e-8)

    def test_gauss_laguerre_matches_adaptive(self):
        d = density(2, 4)
        rule = gauss_laguerre_rule(64)
        assert eig_expectation(d, lambda x: x * x, rule) == pytest.approx(
            eig_expectation(d, lambda x: x * x), rel=1e-9)

    def test_cdf(self):
        assert eig_cdf(density(1, 1), 1.0) == pytest.approx(1.0 - math.exp(-1.0), rel=1e-10)
        assert eig_cdf(density(2, 2), 0.0) == 0.0
        assert eig_cdf(density(2, 2), math.inf) == 1.0
        assert eig_cdf(density(2, 4), 100.0) == pytest.approx(1.0, abs=1e-9)

    def test_breakpoints_positive(self):
        points = eig_breakpoints(density(2, 4))
        assert points and all(p > 0 for p in points)
        assert 4.0 in points

    def test_negative_argument(self):
        with pytest.raises(ValidationError):
            eig_pdf(density(2, 2), -1.0)


class TestNoiseLevelDensity:

    def test_parameters(self):
        dims = ChannelDims(2, 4)
        complex_gamma = NoiseLevelDensity(dims, 0.5, DofConvention.COMPLEX_GAMMA)
        half_dof = NoiseLevelDensity(dims, 0.5, DofConvention.PAPER_HALF_DOF)
        assert (complex_gamma.shape, complex_gamma.scale) == (3.0, 0.5)
        assert (half_dof.shape, half_dof.scale) == (1.5, 0.25)

    def test_default_convention_from_config(self, default_config):
        dims = ChannelDims(1, 1)
        assert NoiseLevelDensity(dims, 1.0).dof_convention is DofConvention.COMPLEX_GAMMA
        default_config.set("spectra.default_dof_convention", "paper-half-dof")
        assert NoiseLevelDensity(dims, 1.0).dof_convention is DofConvention.PAPER_HALF_DOF

    def test_reference_values(self):
        sigma2 = 0.3
        d = NoiseLevelDensity(ChannelDims(2, 2), sigma2, DofConvention.COMPLEX_GAMMA)
        assert noise_level_pdf(d, sigma2) == pytest.approx(math.exp(-1.0) / sigma2, rel=1e-12)
        half = NoiseLevelDensity(ChannelDims(1, 1), 1.0, DofConvention.PAPER_HALF_DOF)
        expected = 2.0 ** -0.5 / math.gamma(0.5) * math.exp(-0.5)
        assert noise_level_pdf(half, 1.0) == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize("convention", list(DofConvention))
    @pytest.mark.parametrize("k, m", [(1, 1), (1, 2), (2, 4), (2, 8)])
    def test_normalization_and_inverse_mean(self, convention, k, m):
        sigma2 = 0.1
        d = NoiseLevelDensity(ChannelDims(k, m), sigma2, convention)
        assert noise_level_expectation(d, lambda a: 1.0) == pytest.approx(1.0, abs=1e-9)
        # 两种约定的 E[1/a] 都是 (M-K+1)/σ²
        assert noise_level_expectation(d, lambda a: 1.0 / a) == pytest.approx((m - k + 1) / sigma2, rel=1e-8)

    def test_cdf_matches_pdf(self):
        d = NoiseLevelDensity(ChannelDims(2, 4), 1.0)
        a, h = 0.4, 1e-5
        derivative = (noise_level_cdf(d, a + h) - noise_level_cdf(d, a - h)) / (2 * h)
        assert derivative == pytest.approx(noise_level_pdf(d, a), rel=1e-6)
        assert noise_level_cdf(d, 0.0) == 0.0
        assert noise_level_cdf(d, math.inf) == 1.0

    def test_median_for_exponential_gain(self):
        d = NoiseLevelDensity(ChannelDims(2, 2), 1.0, DofConvention.COMPLEX_GAMMA)
        assert noise_level_quantile(d, 0.5) == pytest.approx(1.0 / math.log(2.0), rel=1e-9)
        grid = noise_level_quantiles(d, 2)
        assert grid.points[0] == pytest.approx(1.0 / math.log(2.0), rel=1e-9)
        assert grid.entropy_bits == pytest.approx(1.0, abs=1e-9)

    @pytest.mark.parametrize("convention", list(DofConvention))
    def test_quartiles(self, convention):
        d = NoiseLevelDensity(ChannelDims(2, 4), 0.01, convention)
        grid = noise_level_quantiles(d, 4)
        for i, b in enumerate(grid.points, start=1):
            assert noise_level_cdf(d, b) == pytest.approx(i / 4.0, abs=1e-6)
        assert np.allclose(grid.pmf, 0.25, atol=1e-6)
        assert grid.entropy_bits == pytest.approx(2.0, abs=1e-6)

    def test_level_masses(self):
        d = NoiseLevelDensity(ChannelDims(1, 2), 1.0)
        masses = level_masses(d, [0.2, 0.2, 1.0])
        assert len(masses) == 4
        assert masses[1] == 0.0
        assert sum(masses) == pytest.approx(1.0)

    def test_invalid_inputs(self):
        with pytest.raises(UnsupportedConfigurationError):
            NoiseLevelDensity(ChannelDims(4, 2), 1.0)
        d = NoiseLevelDensity(ChannelDims(1, 1), 1.0)
        with pytest.raises(ValidationError):
            noise_level_pdf(d, 0.0)
        with pytest.raises(ValidationError):
            noise_level_quantiles(d, 1)
        with pytest.raises(ValidationError):
            noise_level_quantile(d, 1.0)
