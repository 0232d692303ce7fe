# This Python file uses the following encoding: utf-8

"""
随机数流 - 按 (种子, 命名空间, 分块) 确定的独立流

每个分块的样本只由其流决定，与线程数和调度顺序无关。
"""

import math
from typing import Callable, List, Sequence, Tuple, TypeVar
import numpy as np
from joblib import Parallel, delayed
from ..utils.config import Config
from ..utils.logger import get_logger

logger = get_logger(__name__)

R = TypeVar('R')


def stream_generator(seed: int, *stream: int) -> np.random.Generator:
    """
    指定流的生成器

    Args:
        seed: 根种子
        stream: 流标识（可多级，如 (命名空间, 分块)）

    Returns:
        PCG64 生成器
    """
    sequence = np.random.SeedSequence(int(seed), spawn_key=tuple(int(s) for s in stream))
    return np.random.Generator(np.random.PCG64(sequence))


def chunk_sizes(n: int, chunk_size: int = None) -> List[int]:
    """把 n 个样本按固定大小切块"""
    if chunk_size is None:
        chunk_size = int(Config().get("oracle.chunk_size", 10_000))
    chunk_size = max(1, chunk_size)
    full, rest = divmod(int(n), chunk_size)
    return [chunk_size] * full + ([rest] if rest else [])


def map_chunks(task: Callable[[np.random.Generator, int], R], n: int, seed: int,
               namespace: int, n_jobs: int = None) -> List[R]:
    """
    在各分块上并行执行 task(rng, count)，结果按分块顺序返回

    Args:
        task: 分块任务
        n: 样本总数
        seed: 根种子
        namespace: 校验项命名空间，不同校验互不重叠
        n_jobs: 线程数，缺省取配置值

    Returns:
        各分块结果
    """
    if n_jobs is None:
        n_jobs = Config().get_oracle_n_jobs()
    sizes = chunk_sizes(n)
    jobs = [(index, size) for index, size in enumerate(sizes)]

    def run(index: int, size: int) -> R:
        return task(stream_generator(seed, namespace, index), size)

    if n_jobs == 1 or len(jobs) == 1:
        return [run(index, size) for index, size in jobs]
    return Parallel(n_jobs=n_jobs, prefer="threads")(delayed(run)(index, size) for index, size in jobs)


def mean_and_stderr(chunks: Sequence[np.ndarray]) -> Tuple[float, float]:
    """
    合并各分块样本的均值与标准误差

    Args:
        chunks: 各分块的一维样本

    Returns:
        (均值, 标准误差)
    """
    n = sum(len(c) for c in chunks)
    if n == 0:
        return math.nan, math.nan
    mean = math.fsum(math.fsum(c) for c in chunks) / n
    if n == 1:
        return mean, math.inf
    square = math.fsum(math.fsum((c - mean) ** 2) for c in chunks)
    return mean, math.sqrt(square / (n - 1) / n)
