"""
Use Case: schedule
Düzenlileştirme çizelgesini (m₀, Θ, p-zinciri) hesaplar; dosya yazmaz.
"""

from ...core.use_case_registry import UseCaseMetadata
from ..analysis.schedule import regularization_schedule
from ..dtos import CommandResult, ScheduleRequest
from .base_use_case import EXIT_OK, BaseUseCase


class ScheduleUseCase(BaseUseCase[ScheduleRequest]):
    """Saf aritmetik; yapılandırma dosyası gerekmez"""

    @classmethod
    def get_metadata(cls) -> UseCaseMetadata:
        return UseCaseMetadata(
            name="schedule",
            description="m₀ = ⌈Nr′⌉, Θ = ⌈Nr₀/(r₀ − 1)⌉ ve p-zinciri",
            priority=30,
            requires_config=False,
            writes_output=False,
        )

    def execute(self, request: ScheduleRequest) -> CommandResult:
        report = regularization_schedule(request.N, request.p, request.q, request.r0)
        return CommandResult(
            exit_code=EXIT_OK,
            summary=[f"{name}: {value}" for name, value in report.rows()],
        )
