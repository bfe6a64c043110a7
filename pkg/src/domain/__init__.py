"""
Domain Layer
Laboratuvar çekirdeği - ızgaralar, normlar, katsayılar, hatalar
"""

from .entities import (
    SpatialGrid,
    TimeGrid,
    GridFunction,
    HistorySegment,
    Trajectory,
)

from .norms import (
    lp_norm,
    lp_norms_over_time,
    duality_pairing,
    history_norm,
    initial_datum_norm,
    traj_sup_norm,
)

from .coefficients import (
    CoeffExpr,
    ComponentCoefficients,
    ParameterPoint,
    MatrixSample,
    SampleBox,
    matrix_norm,
)

from .exceptions import (
    DomainException,
    ValidationError,
    AssumptionViolation,
    ExpressionSyntaxError,
    UnknownIdentifierError,
    GridMismatchError,
    OffGridTimeError,
    ScheduleRequiredError,
    ConfigurationError,
    SolverError,
    ConvergenceError,
)

from .interfaces import (
    IEvolutionFamily,
    IProgressNotifier,
    IConfigProvider,
    IResultWriter,
)

from .value_objects import Exponent, BoundaryKind, Scheme, Quadrature, AdjointMode, Provenance

from .events import (
    DomainEvent,
    PicardSweepEvent,
    MuAdjustedEvent,
    StudyMemberEvent,
    CheckCompletedEvent,
)

__all__ = [
    # Entities
    "SpatialGrid",
    "TimeGrid",
    "GridFunction",
    "HistorySegment",
    "Trajectory",
    # Norms
    "lp_norm",
    "lp_norms_over_time",
    "duality_pairing",
    "history_norm",
    "initial_datum_norm",
    "traj_sup_norm",
    # Coefficients
    "CoeffExpr",
    "ComponentCoefficients",
    "ParameterPoint",
    "MatrixSample",
    "SampleBox",
    "matrix_norm",
    # Exceptions
    "DomainException",
    "ValidationError",
    "AssumptionViolation",
    "ExpressionSyntaxError",
    "UnknownIdentifierError",
    "GridMismatchError",
    "OffGridTimeError",
    "ScheduleRequiredError",
    "ConfigurationError",
    "SolverError",
    "ConvergenceError",
    # Interfaces
    "IEvolutionFamily",
    "IProgressNotifier",
    "IConfigProvider",
    "IResultWriter",
    # Value Objects
    "Exponent",
    "BoundaryKind",
    "Scheme",
    "Quadrature",
    "AdjointMode",
    "Provenance",
    # Events
    "DomainEvent",
    "PicardSweepEvent",
    "MuAdjustedEvent",
    "StudyMemberEvent",
    "CheckCompletedEvent",
]
