"""
Analiz
Açık sabitler, düzenlileştirme çizelgesi, sınır doğrulaması,
weak-* çalışmaları ve bağımsız kehanetler.
"""

from .bounds import BoundConstants, gronwall_bound, smoothing_bound_mbar
from .schedule import (
    bootstrap_steps,
    half_condition,
    regularization_schedule,
    steps_suffice,
    waiting_time,
)
from .verification import verify_gronwall, verify_smoothing
from .study import trend_passes, weakstar_study
from .oracles import (
    EigenmodeProjection,
    ScalarTrajectory,
    eigenmode_projection,
    oracle_method_of_steps,
    oracle_monolithic,
)

__all__ = [
    "BoundConstants",
    "gronwall_bound",
    "smoothing_bound_mbar",
    "bootstrap_steps",
    "half_condition",
    "regularization_schedule",
    "steps_suffice",
    "waiting_time",
    "verify_gronwall",
    "verify_smoothing",
    "trend_passes",
    "weakstar_study",
    "EigenmodeProjection",
    "ScalarTrajectory",
    "eigenmode_projection",
    "oracle_method_of_steps",
    "oracle_monolithic",
]
