"""
Mild Çözücüler
Duhamel integrali, 𝔊 dönüşümü, d_μ metriği, Picard ve adım adım çözücüler,
öteleme özdeşliği.
"""

from .coupling import CouplingSampler, check_history, delayed_values
from .duhamel import duhamel_integral, duhamel_trajectory
from .picard import (
    PicardSolution,
    PicardSolver,
    assemble_trajectory,
    auto_mu,
    contraction_bound,
    gothic_g_apply,
    solve_picard,
    weighted_metric,
)
from .marching import solve_marching, translation_check

__all__ = [
    "CouplingSampler",
    "check_history",
    "delayed_values",
    "duhamel_integral",
    "duhamel_trajectory",
    "PicardSolution",
    "PicardSolver",
    "assemble_trajectory",
    "auto_mu",
    "contraction_bound",
    "gothic_g_apply",
    "solve_picard",
    "weighted_metric",
    "solve_marching",
    "translation_check",
]
