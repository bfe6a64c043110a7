"""
Core - Use Case Registry
CLI alt komutlarını (solve, verify, schedule, study) use case sınıflarına bağlar.
"""

from dataclasses import dataclass

from .registry import PluginMetadata, PluginRegistry


@dataclass(frozen=True)
class UseCaseMetadata(PluginMetadata):
    """
    requires_config: --config ile RunConfig okur
    writes_output: çıktı dizinine CSV/manifest yazar
    """
    requires_config: bool = True
    writes_output: bool = True


class UseCaseRegistry(PluginRegistry):
    """
    Kullanım:
        use_case = get_use_case_registry().get("solve", context_loader=loader, writer=writer)
        result = use_case.run(SolveRequest(config_path="run.json"))
    """

    package = "src.application.use_cases"
    base_path = "src.application.use_cases.base_use_case:BaseUseCase"


def get_use_case_registry() -> UseCaseRegistry:
    return UseCaseRegistry.get_instance()
