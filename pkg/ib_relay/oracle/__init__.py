"""
蒙特卡洛校验模块
"""

from .streams import stream_generator, map_chunks, mean_and_stderr
from .sampling import (
    ChannelSample, complex_gaussian, sample_channels, sample_channel, gram, pooled_eigenvalues,
    well_conditioned_channels
)
from .histograms import EmpiricalHistogram, equal_mass_histogram, compare_histogram
from .reports import CheckReport, OracleSuiteReport
from .checks import (
    check_channel_statistics, empirical_eigenvalues, empirical_eig_check, empirical_noise_levels,
    check_noise_levels, empirical_capacity, check_capacity, empirical_upper_bound,
    check_upper_bound, check_mmse_ratio
)
from .covariance import expected_covariance_scales, check_covariance_identities
from .qci_chain import simulate_qci_chain
from .matrix_inequalities import (
    random_positive_definite, log_det_gap, trace_gap, majorization_gap, check_matrix_inequalities
)
from .suite import run_oracle_suite

__all__ = [
    'stream_generator', 'map_chunks', 'mean_and_stderr',
    'ChannelSample', 'complex_gaussian', 'sample_channels', 'sample_channel', 'gram',
    'pooled_eigenvalues', 'well_conditioned_channels',
    'EmpiricalHistogram', 'equal_mass_histogram', 'compare_histogram',
    'CheckReport', 'OracleSuiteReport',
    'check_channel_statistics', 'empirical_eigenvalues', 'empirical_eig_check',
    'empirical_noise_levels', 'check_noise_levels', 'empirical_capacity', 'check_capacity',
    'empirical_upper_bound', 'check_upper_bound', 'check_mmse_ratio',
    'expected_covariance_scales', 'check_covariance_identities',
    'simulate_qci_chain',
    'random_positive_definite', 'log_det_gap', 'trace_gap', 'majorization_gap',
    'check_matrix_inequalities',
    'run_oracle_suite',
]
