"""
谱分布模块 - 特征值密度与噪声电平密度
"""

from .eig_density import EigDensity, eig_pdf, eig_cdf, eig_breakpoints, eig_expectation
from .noise_level import (
    NoiseLevelDensity, noise_level_pdf, noise_level_cdf, noise_level_expectation,
    noise_level_quantile, noise_level_quantiles, level_masses
)

__all__ = [
    'EigDensity', 'eig_pdf', 'eig_cdf', 'eig_breakpoints', 'eig_expectation',
    'NoiseLevelDensity', 'noise_level_pdf', 'noise_level_cdf', 'noise_level_expectation',
    'noise_level_quantile', 'noise_level_quantiles', 'level_masses'
]
