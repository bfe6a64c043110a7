"""
Core Module
Result monad ve plugin registry'leri (use case'ler, doğrulama paketleri).
"""

from .registry import PluginMetadata, PluginRegistry
from .result import Result, try_result
from .suite_registry import SuiteRegistry, get_suite_registry
from .use_case_registry import UseCaseMetadata, UseCaseRegistry, get_use_case_registry

__all__ = [
    # Result
    "Result",
    "try_result",
    # Registry
    "PluginMetadata",
    "PluginRegistry",
    "SuiteRegistry",
    "UseCaseMetadata",
    "UseCaseRegistry",
    "get_suite_registry",
    "get_use_case_registry",
]
