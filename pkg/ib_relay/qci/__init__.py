"""
QCI 模块 - 量化信道求逆下界
"""

from .grid import grid_pmf, quantile_grid, lemma_grid
from .waterfill import available_budget, qci_waterfill
from .rates import qci_rate, qci_quantile_rate, qci_limit_rate, qci_limits
from .representation import repr_fading, surrogate_compression_rate

__all__ = [
    'grid_pmf', 'quantile_grid', 'lemma_grid',
    'available_budget', 'qci_waterfill',
    'qci_rate', 'qci_quantile_rate', 'qci_limit_rate', 'qci_limits',
    'repr_fading', 'surrogate_compression_rate'
]
