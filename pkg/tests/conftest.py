"""
测试公共夹具
"""

import pytest
from ib_relay.utils.config import Config


@pytest.fixture(autouse=True)
def default_config():
    """每个测试前后恢复默认配置（Config 为单例）"""
    config = Config()
    config.reset_to_default()
    yield config
    config.reset_to_default()
