"""
Application Layer
Çözücüler, analizler, doğrulama paketleri ve CLI use case'leri
"""

from .context import RunContext

from .use_cases import (
    BaseUseCase,
    SolveUseCase,
    VerifyUseCase,
    ScheduleUseCase,
    StudyUseCase,
)

from .suites import VerificationSuite

from .dtos import (
    RunConfig,
    SolverSettings,
    PicardConfig,
    StudySettings,
    CommandResult,
    CheckRecord,
)

from .services import LoggingProgressNotifier, SilentProgressNotifier

__all__ = [
    # Context
    "RunContext",
    # Use Cases
    "BaseUseCase",
    "SolveUseCase",
    "VerifyUseCase",
    "ScheduleUseCase",
    "StudyUseCase",
    # Suites
    "VerificationSuite",
    # DTOs
    "RunConfig",
    "SolverSettings",
    "PicardConfig",
    "StudySettings",
    "CommandResult",
    "CheckRecord",
    # Services
    "LoggingProgressNotifier",
    "SilentProgressNotifier",
]
