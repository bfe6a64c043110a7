"""
Core - Suite Registry
Doğrulama paketlerinin (cocycle, duality, picard, ...) otomatik keşfi.
"""

from .registry import PluginRegistry


class SuiteRegistry(PluginRegistry):
    """
    Kullanım:
        registry = get_suite_registry()
        registry.ensure_discovered()
        records = registry.get("cocycle", context=context).run()
    """

    package = "src.application.suites"
    base_path = "src.application.suites.base_suite:VerificationSuite"


def get_suite_registry() -> SuiteRegistry:
    return SuiteRegistry.get_instance()
