"""
Config Infrastructure
"""

from .settings import ConfigService
from .run_config_loader import RunConfigLoader, config_hash

__all__ = ["ConfigService", "RunConfigLoader", "config_hash"]
