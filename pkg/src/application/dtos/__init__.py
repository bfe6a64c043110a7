"""
Application DTOs
"""

from .requests import (
    ComponentSpec,
    DomainSpec,
    EstimateSettings,
    InitialSpec,
    OutputSettings,
    PicardConfig,
    RunConfig,
    ScheduleRequest,
    SolveRequest,
    SolverSettings,
    StudyRequest,
    StudySettings,
    SystemSpec,
    TimeSpec,
    VerifyRequest,
)
from .reports import (
    CheckRecord,
    CommandResult,
    ConvergenceStudy,
    EstimateReport,
    RunManifest,
    ScheduleReport,
)

__all__ = [
    "ComponentSpec",
    "DomainSpec",
    "EstimateSettings",
    "InitialSpec",
    "OutputSettings",
    "PicardConfig",
    "RunConfig",
    "ScheduleRequest",
    "SolveRequest",
    "StudyRequest",
    "VerifyRequest",
    "SolverSettings",
    "StudySettings",
    "SystemSpec",
    "TimeSpec",
    "CheckRecord",
    "CommandResult",
    "ConvergenceStudy",
    "EstimateReport",
    "RunManifest",
    "ScheduleReport",
]
