# This Python file uses the following encoding: utf-8

"""
配置管理 - 管理数值计算与实验配置
"""

import copy
import json
import os
from typing import Dict, Any
from ..core.enums import DofConvention, QuadratureKind
from .constants import (
    NumericConstants, SpectraConstants, QciConstants, OracleConstants, SweepConstants
)
from .logger import get_logger
from .exceptions import ConfigError

logger = get_logger(__name__)

DEFAULT_CONFIG_FILE = "ib_relay.json"


class Config:
    """配置管理类 - 单例模式"""

    _instance = None
    _initialized = False

    def __new__(cls, config_file: str = None):
        if cls._instance is None:
            cls._instance = super(Config, cls).__new__(cls)
        return cls._instance

    def __init__(self, config_file: str = None):
        if not self._initialized:
            self.config_file = config_file or os.environ.get("IBRELAY_CONFIG", DEFAULT_CONFIG_FILE)
            self.config = self._load_default_config()
            self._initialized = True
        self.load_config()

    def _load_default_config(self) -> Dict[str, Any]:
        """加载默认配置"""
        return {
            "numerics": {
                "quadrature": QuadratureKind.ADAPTIVE_INTERVAL.value,
                "gauss_laguerre_nodes": NumericConstants.GAUSS_LAGUERRE_NODES,
                "quad_epsabs": NumericConstants.QUAD_EPSABS,
                "quad_epsrel": NumericConstants.QUAD_EPSREL,
                "quad_limit": NumericConstants.QUAD_LIMIT,
                "quad_max_refinements": NumericConstants.QUAD_MAX_REFINEMENTS,
                "root_tolerance": NumericConstants.ROOT_TOLERANCE,
                "root_max_iterations": NumericConstants.ROOT_MAX_ITERATIONS,
                "bracket_widenings": NumericConstants.BRACKET_WIDENINGS
            },
            "spectra": {
                "default_dof_convention": DofConvention.COMPLEX_GAMMA.value,
                "quantile_lower_factor": SpectraConstants.QUANTILE_LOWER_FACTOR,
                "quantile_upper_factor": SpectraConstants.QUANTILE_UPPER_FACTOR
            },
            "qci": {
                "feasibility_margin_bits": QciConstants.FEASIBILITY_MARGIN_BITS,
                "lemma_grid_epsilon": QciConstants.LEMMA_GRID_EPSILON
            },
            "oracle": {
                "quick_samples": OracleConstants.QUICK_SAMPLES,
                "full_samples": OracleConstants.FULL_SAMPLES,
                "histogram_bins": OracleConstants.HISTOGRAM_BINS,
                "condition_limit": OracleConstants.CONDITION_LIMIT,
                "max_resample_fraction": OracleConstants.MAX_RESAMPLE_FRACTION,
                "chunk_size": OracleConstants.CHUNK_SIZE,
                "n_jobs": 1,
                "bin_relative_tolerance": OracleConstants.BIN_RELATIVE_TOLERANCE,
                "bin_sigma_tolerance": OracleConstants.BIN_SIGMA_TOLERANCE
            },
            "sweep": {
                "n_jobs": 1,
                "significant_digits": SweepConstants.SIGNIFICANT_DIGITS
            },
            "logging": {
                "dir": "logs",
                "level": "INFO"
            }
        }

    def load_config(self) -> bool:
        """从文件加载配置"""
        # 避免重复加载
        if hasattr(self, '_config_loaded'):
            return True

        try:
            if os.path.exists(self.config_file):
                with open(self.config_file, 'r', encoding='utf-8') as f:
                    loaded_config = json.load(f)
                    self._merge_config(loaded_config)
                logger.info(f"配置已从文件加载: {self.config_file}")
                self._config_loaded = True
                return True
            else:
                logger.debug(f"配置文件不存在，使用默认配置: {self.config_file}")
                self._config_loaded = True
                return False
        except Exception as e:
            error_msg = f"加载配置文件失败: {e}"
            logger.error(error_msg)
            self._config_loaded = True
            raise ConfigError(error_msg, config_key=self.config_file) from e

    def save_config(self) -> bool:
        """保存配置到文件"""
        try:
            with open(self.config_file, 'w', encoding='utf-8') as f:
                json.dump(self.config, f, ensure_ascii=False, indent=2)
            logger.info(f"配置已保存到文件: {self.config_file}")
            return True
        except Exception as e:
            error_msg = f"保存配置文件失败: {e}"
            logger.error(error_msg)
            raise ConfigError(error_msg, config_key=self.config_file) from e

    def _merge_config(self, loaded_config: Dict[str, Any]):
        """合并配置"""
        def merge_dict(base: Dict[str, Any], update: Dict[str, Any]):
            for key, value in update.items():
                if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                    merge_dict(base[key], value)
                else:
                    base[key] = value

        merge_dict(self.config, loaded_config)

    def get(self, key: str, default: Any = None) -> Any:
        """获取配置值"""
        keys = key.split('.')
        value = self.config

        try:
            for k in keys:
                value = value[k]
            return value
        except (KeyError, TypeError):
            return default

    def set(self, key: str, value: Any):
        """设置配置值"""
        keys = key.split('.')
        config = self.config

        # 导航到目标位置
        for k in keys[:-1]:
            if k not in config:
                config[k] = {}
            config = config[k]

        config[keys[-1]] = value

    def get_quadrature_kind(self) -> QuadratureKind:
        """获取默认积分规则"""
        value = self.get("numerics.quadrature", QuadratureKind.ADAPTIVE_INTERVAL.value)
        try:
            return QuadratureKind(value)
        except ValueError as e:
            raise ConfigError(f"未知的积分规则: {value}", config_key="numerics.quadrature") from e

    def get_gauss_laguerre_nodes(self) -> int:
        """获取高斯-拉盖尔节点数"""
        return int(self.get("numerics.gauss_laguerre_nodes", NumericConstants.GAUSS_LAGUERRE_NODES))

    def get_quad_tolerances(self) -> tuple:
        """获取自适应积分的 (epsabs, epsrel, limit, max_refinements)"""
        return (
            float(self.get("numerics.quad_epsabs", NumericConstants.QUAD_EPSABS)),
            float(self.get("numerics.quad_epsrel", NumericConstants.QUAD_EPSREL)),
            int(self.get("numerics.quad_limit", NumericConstants.QUAD_LIMIT)),
            int(self.get("numerics.quad_max_refinements", NumericConstants.QUAD_MAX_REFINEMENTS))
        )

    def get_root_tolerance(self) -> float:
        """获取求根容差"""
        return float(self.get("numerics.root_tolerance", NumericConstants.ROOT_TOLERANCE))

    def get_root_max_iterations(self) -> int:
        """获取二分法最大迭代次数"""
        return int(self.get("numerics.root_max_iterations", NumericConstants.ROOT_MAX_ITERATIONS))

    def get_bracket_widenings(self) -> int:
        """获取求根区间最大扩展次数"""
        return int(self.get("numerics.bracket_widenings", NumericConstants.BRACKET_WIDENINGS))

    def get_default_dof_convention(self) -> DofConvention:
        """获取默认的噪声电平自由度约定"""
        value = self.get("spectra.default_dof_convention", DofConvention.COMPLEX_GAMMA.value)
        try:
            return DofConvention(value)
        except ValueError as e:
            raise ConfigError(f"未知的自由度约定: {value}",
                              config_key="spectra.default_dof_convention") from e

    def get_quantile_bracket_factors(self) -> tuple:
        """获取分位数搜索区间因子"""
        return (
            float(self.get("spectra.quantile_lower_factor", SpectraConstants.QUANTILE_LOWER_FACTOR)),
            float(self.get("spectra.quantile_upper_factor", SpectraConstants.QUANTILE_UPPER_FACTOR))
        )

    def get_feasibility_margin(self) -> float:
        """获取 QCI 预算可行性余量"""
        return float(self.get("qci.feasibility_margin_bits", QciConstants.FEASIBILITY_MARGIN_BITS))

    def get_lemma_grid_epsilon(self) -> float:
        """获取大 M 量化网格的 ε"""
        return float(self.get("qci.lemma_grid_epsilon", QciConstants.LEMMA_GRID_EPSILON))

    def get_oracle_samples(self, full: bool) -> int:
        """获取蒙特卡洛样本数"""
        if full:
            return int(self.get("oracle.full_samples", OracleConstants.FULL_SAMPLES))
        return int(self.get("oracle.quick_samples", OracleConstants.QUICK_SAMPLES))

    def get_oracle_n_jobs(self) -> int:
        """获取蒙特卡洛并行线程数"""
        return int(self.get("oracle.n_jobs", 1))

    def get_sweep_n_jobs(self) -> int:
        """获取扫描并行线程数"""
        return int(self.get("sweep.n_jobs", 1))

    def get_significant_digits(self) -> int:
        """获取 CSV 有效数字位数"""
        return int(self.get("sweep.significant_digits", SweepConstants.SIGNIFICANT_DIGITS))

    def reset_to_default(self):
        """重置为默认配置"""
        self.config = self._load_default_config()
        logger.info("配置已重置为默认值")

    def snapshot(self) -> Dict[str, Any]:
        """返回当前配置的深拷贝"""
        return copy.deepcopy(self.config)
