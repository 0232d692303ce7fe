# This Python file uses the following encoding: utf-8

"""
信道采样 - i.i.d. 零均值单位方差圆对称复高斯矩阵
"""

import math
from dataclasses import dataclass
from typing import Tuple
import numpy as np
from ..models.channel import ChannelDims
from ..utils.config import Config
from ..utils.logger import get_logger
from ..utils.exceptions import OracleError
from .streams import stream_generator

logger = get_logger(__name__)


@dataclass(frozen=True)
class ChannelSample:
    """单次信道实现 H（M×K）及其随机流标识"""

    h: np.ndarray
    stream_id: int


def complex_gaussian(rng: np.random.Generator, shape: Tuple[int, ...]) -> np.ndarray:
    """实部、虚部各为方差 1/2 的独立正态"""
    parts = rng.standard_normal(shape + (2,)) * math.sqrt(0.5)
    return parts[..., 0] + 1j * parts[..., 1]


def sample_channels(dims: ChannelDims, rng: np.random.Generator, count: int) -> np.ndarray:
    """一批信道矩阵，形状 (count, M, K)"""
    return complex_gaussian(rng, (int(count), dims.m, dims.k))


def sample_channel(dims: ChannelDims, stream: int, seed: int = 0) -> ChannelSample:
    """
    给定 (种子, 流) 生成一次信道实现

    Args:
        dims: 天线维度
        stream: 流标识
        seed: 根种子

    Returns:
        信道样本
    """
    rng = stream_generator(seed, stream)
    return ChannelSample(sample_channels(dims, rng, 1)[0], stream)


def gram(h: np.ndarray) -> np.ndarray:
    """T×T 格拉姆矩阵：K ≤ M 时为 HᴴH，否则为 HHᴴ"""
    hh = np.conj(np.swapaxes(h, -1, -2))
    if h.shape[-1] <= h.shape[-2]:
        return hh @ h
    return h @ hh


def pooled_eigenvalues(h: np.ndarray) -> np.ndarray:
    """每个样本的 T 个正特征值，展平"""
    try:
        values = np.linalg.eigvalsh(gram(h))
    except np.linalg.LinAlgError:
        logger.warning("批量特征分解失败，逐个样本重算")
        values = np.array([np.linalg.eigvalsh(g) for g in gram(h)])
    return values.reshape(-1)


def well_conditioned_channels(dims: ChannelDims, rng: np.random.Generator,
                              count: int) -> Tuple[np.ndarray, int]:
    """
    采样并替换 HᴴH 条件数超过阈值的样本

    Args:
        dims: 天线维度（K ≤ M）
        rng: 生成器
        count: 样本数

    Returns:
        (信道批, 重采样次数)
    """
    limit = float(Config().get("oracle.condition_limit", 1e12))
    h = sample_channels(dims, rng, count)
    resampled = 0
    bad = np.flatnonzero(np.linalg.cond(gram(h)) > limit)
    while bad.size:
        resampled += bad.size
        if resampled > count:
            raise OracleError(f"重采样次数超过样本数: {resampled}", check="resample")
        h[bad] = sample_channels(dims, rng, bad.size)
        still = np.linalg.cond(gram(h[bad])) > limit
        bad = bad[still]
    return h, resampled


def check_resample_budget(resampled: int, n: int, check: str) -> None:
    """
    重采样比例超过上限说明分布有误

    Raises:
        OracleError: 超过 oracle.max_resample_fraction
    """
    fraction = float(Config().get("oracle.max_resample_fraction", 1e-3))
    if resampled > fraction * n:
        error_msg = f"{check}: 重采样 {resampled}/{n} 超过上限 {fraction:.1%}"
        logger.error(error_msg)
        raise OracleError(error_msg, check=check)
    if resampled:
        logger.warning(f"{check}: 近奇异样本重采样 {resampled} 次")
