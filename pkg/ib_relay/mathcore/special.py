# This Python file uses the following encoding: utf-8

"""
特殊函数 - 广义拉盖尔多项式与对数伽马函数
"""

from typing import Union
import numpy as np
from scipy.special import gammaln
from ..utils.exceptions import DomainError, ValidationError

ArrayLike = Union[float, np.ndarray]


def _check_order(i: int, alpha: float):
    if int(i) != i or i < 0:
        raise ValidationError(f"拉盖尔多项式阶数必须为非负整数: {i}", field="i")
    if alpha < 0:
        raise ValidationError(f"拉盖尔多项式参数必须非负: {alpha}", field="alpha")


def laguerre_table(n: int, alpha: float, x: ArrayLike) -> np.ndarray:
    """
    一次性计算 L_0^α(x) … L_{n-1}^α(x)

    Args:
        n: 多项式个数
        alpha: 广义参数 α
        x: 自变量（标量或数组）

    Returns:
        形状为 (n,) + x.shape 的数组
    """
    _check_order(n, alpha)
    x = np.asarray(x, dtype=float)
    table = np.empty((n,) + x.shape, dtype=float)
    if n == 0:
        return table
    table[0] = 1.0
    if n > 1:
        table[1] = 1.0 + alpha - x
    # 向上三项递推
    for k in range(1, n - 1):
        table[k + 1] = ((2 * k + 1 + alpha - x) * table[k] - (k + alpha) * table[k - 1]) / (k + 1)
    return table


def laguerre(i: int, alpha: float, x: ArrayLike) -> ArrayLike:
    """
    广义拉盖尔多项式 L_i^α(x)

    Args:
        i: 阶数
        alpha: 广义参数 α
        x: 自变量（标量或数组）

    Returns:
        与 x 同形状的函数值
    """
    value = laguerre_table(int(i) + 1, alpha, x)[int(i)]
    if np.ndim(value) == 0:
        return float(value)
    return value


def log_gamma(x: ArrayLike) -> ArrayLike:
    """
    ln Γ(x)，x > 0

    Raises:
        DomainError: x ≤ 0
    """
    arr = np.asarray(x, dtype=float)
    if np.any(~(arr > 0)):
        raise DomainError(f"log_gamma 仅对正数有定义: {x}", argument=x)
    value = gammaln(arr)
    if np.ndim(value) == 0:
        return float(value)
    return value
