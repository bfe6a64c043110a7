"""
Application Use Cases
CLI alt komutları: solve, verify, schedule, study.
UseCaseRegistry bu paketteki BaseUseCase alt sınıflarını otomatik keşfeder.
"""

from .base_use_case import (
    EXIT_CHECK_FAILED,
    EXIT_CONFIG,
    EXIT_OK,
    EXIT_SOLVER,
    BaseUseCase,
)
from .solve import SolveUseCase
from .verify import VerifyUseCase
from .schedule import ScheduleUseCase
from .study import StudyUseCase

__all__ = [
    "EXIT_CHECK_FAILED",
    "EXIT_CONFIG",
    "EXIT_OK",
    "EXIT_SOLVER",
    "BaseUseCase",
    "SolveUseCase",
    "VerifyUseCase",
    "ScheduleUseCase",
    "StudyUseCase",
]
