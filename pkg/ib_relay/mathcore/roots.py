# This Python file uses the following encoding: utf-8

"""
单调函数求根
"""

import math
from typing import Callable, Optional, Tuple
from ..utils.config import Config
from ..utils.logger import get_logger
from ..utils.exceptions import BracketingError

logger = get_logger(__name__)


def bisect_monotone(f: Callable[[float], float], lo: float, hi: float,
                    tol: Optional[float] = None) -> float:
    """
    单调函数二分求根

    Args:
        f: 在 [lo, hi] 上单调的函数
        lo: 区间左端
        hi: 区间右端
        tol: 自变量容差，缺省取配置值

    Returns:
        根的近似值

    Raises:
        BracketingError: 区间两端没有变号
    """
    config = Config()
    if tol is None:
        tol = config.get_root_tolerance()
    max_iterations = config.get_root_max_iterations()

    if hi < lo:
        lo, hi = hi, lo
    f_lo = f(lo)
    f_hi = f(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if math.isnan(f_lo) or math.isnan(f_hi) or (f_lo > 0) == (f_hi > 0):
        raise BracketingError(f"求根区间两端未变号: f({lo})={f_lo}, f({hi})={f_hi}", lo=lo, hi=hi)

    for _ in range(max_iterations):
        mid = 0.5 * (lo + hi)
        # 浮点分辨率已到极限
        if mid <= lo or mid >= hi or hi - lo <= tol:
            break
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    return 0.5 * (lo + hi)


def widen_bracket(f: Callable[[float], float], lo: float, hi: float,
                  max_widenings: Optional[int] = None) -> Tuple[float, float]:
    """
    向两侧加倍扩展区间直到 f 在两端变号

    Args:
        f: 单调函数
        lo: 初始左端
        hi: 初始右端
        max_widenings: 最大扩展次数，缺省取配置值

    Returns:
        变号区间 (lo, hi)

    Raises:
        BracketingError: 扩展次数用尽仍未变号
    """
    if max_widenings is None:
        max_widenings = Config().get_bracket_widenings()
    width = max(hi - lo, 1.0)
    f_lo, f_hi = f(lo), f(hi)
    for attempt in range(max_widenings + 1):
        if (f_lo > 0) != (f_hi > 0) or f_lo == 0.0 or f_hi == 0.0:
            if attempt:
                logger.debug(f"求根区间扩展 {attempt} 次: [{lo}, {hi}]")
            return lo, hi
        lo -= width
        hi += width
        width *= 2.0
        f_lo, f_hi = f(lo), f(hi)
    error_msg = f"区间扩展 {max_widenings} 次后仍未变号: [{lo}, {hi}]"
    logger.error(error_msg)
    raise BracketingError(error_msg, lo=lo, hi=hi)
