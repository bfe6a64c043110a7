"""
Logging Infrastructure
stderr konsol handler'ı ve opsiyonel PDDE_LOG_FILE dosya handler'ı
"""

from .logger import configure_logging, get_logger, setup_logger

__all__ = ["configure_logging", "get_logger", "setup_logger"]
