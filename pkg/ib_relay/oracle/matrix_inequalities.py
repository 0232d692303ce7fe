# This Python file uses the following encoding: utf-8

"""
正定矩阵不等式的随机性质检验

对 W = AAᴴ + εI 及其对角部分 W₁ 检验：
    log det(I + W) - log det W ≥ log det(I + W₁) - log det W₁
    tr(W₁⁻¹) ≤ tr(W⁻¹)
    对角元序列被特征值序列优超
"""

import numpy as np
from ..utils.constants import OracleConstants
from ..utils.exceptions import ValidationError
from .checks import NS_MATRIX
from .reports import CheckReport
from .sampling import complex_gaussian
from .streams import stream_generator

_EPSILON = 1e-3


def random_positive_definite(rng: np.random.Generator, k: int, trials: int) -> np.ndarray:
    """trials 个 k×k 正定矩阵"""
    a = complex_gaussian(rng, (trials, k, k))
    return a @ np.conj(np.swapaxes(a, -1, -2)) + _EPSILON * np.eye(k)


def _spectrum(w: np.ndarray):
    return np.linalg.eigvalsh(w), np.real(np.diagonal(w, axis1=-2, axis2=-1))


def log_det_gap(w: np.ndarray) -> np.ndarray:
    """[log det(I+W) - log det W] - [log det(I+W₁) - log det W₁]，应非负"""
    eigenvalues, diagonal = _spectrum(w)
    return np.sum(np.log1p(1.0 / eigenvalues), axis=-1) - np.sum(np.log1p(1.0 / diagonal), axis=-1)


def trace_gap(w: np.ndarray) -> np.ndarray:
    """tr(W⁻¹) - tr(W₁⁻¹)，应非负"""
    eigenvalues, diagonal = _spectrum(w)
    return np.sum(1.0 / eigenvalues, axis=-1) - np.sum(1.0 / diagonal, axis=-1)


def majorization_gap(w: np.ndarray) -> np.ndarray:
    """
    降序部分和之差的最小值 min_m Σ_{i≤m}(θ_i - o_i)，应非负；
    全部分量之和（迹）相等
    """
    eigenvalues, diagonal = _spectrum(w)
    diag_partial = np.cumsum(-np.sort(-diagonal, axis=-1), axis=-1)
    eig_partial = np.cumsum(-np.sort(-eigenvalues, axis=-1), axis=-1)
    gaps = eig_partial - diag_partial
    # 最后一项是迹之差，按绝对值计
    gaps[..., -1] = -np.abs(gaps[..., -1])
    return np.min(gaps, axis=-1)


def check_matrix_inequalities(k: int, trials: int, seed: int = 0) -> CheckReport:
    """
    Args:
        k: 矩阵阶数
        trials: 随机试验次数
        seed: 根种子

    Returns:
        校验报告（记录各不等式的违反次数）
    """
    if k < 1 or trials < 1:
        raise ValidationError(f"参数必须为正: k={k}, trials={trials}", field="k")
    slack = OracleConstants.INEQUALITY_SLACK
    w = random_positive_definite(stream_generator(seed, NS_MATRIX, k), k, trials)
    eigenvalues = np.linalg.eigvalsh(w)
    scale = np.maximum(1.0, np.sum(1.0 / eigenvalues, axis=-1))
    trace_scale = np.maximum(1.0, np.sum(eigenvalues, axis=-1))

    log_det = log_det_gap(w)
    trace = trace_gap(w)
    majorization = majorization_gap(w)
    log_det_violations = int(np.sum(log_det < -slack * scale))
    trace_violations = int(np.sum(trace < -slack * scale))
    majorization_violations = int(np.sum(majorization < -slack * trace_scale))

    report = CheckReport(f"matrix_inequalities[k={k}]", n_samples=trials)
    report.metrics.update({
        "log_det_violations": log_det_violations,
        "trace_violations": trace_violations,
        "majorization_violations": majorization_violations,
        "min_log_det_gap": float(np.min(log_det)),
    })
    report.expect(log_det_violations == 0, f"log det 不等式违反 {log_det_violations} 次")
    report.expect(trace_violations == 0, f"迹不等式违反 {trace_violations} 次")
    report.expect(majorization_violations == 0, f"优超关系违反 {majorization_violations} 次")
    return report
