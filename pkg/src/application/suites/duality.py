"""
Doğrulama Paketi: duality
⟨U(t,s)u, v⟩ = ⟨u, U*(s,t)v⟩; transpoze modunda makine hassasiyetinde,
yeniden ayrıklaştırma modunda kendine eşlenik durumda yaklaşık.
"""

from typing import List
import logging

import numpy as np

from ...core.registry import PluginMetadata
from ...domain import AdjointMode, GridFunction, IEvolutionFamily
from ..dtos import CheckRecord
from ..services.propagator_analysis import duality_defect
from ..services.validation import has_first_order_terms
from .base_suite import VerificationSuite

logger = logging.getLogger(__name__)


PAIRS = 50
TRANSPOSE_TOLERANCE = 1e-10
REDISCRETIZE_TOLERANCE = 1e-3


class DualitySuite(VerificationSuite):
    """Adjoint propagatör ile ileri propagatörün dualitesi"""

    @classmethod
    def get_metadata(cls) -> PluginMetadata:
        return PluginMetadata(
            name="duality",
            description="Adjoint evolüsyon ailesi dualite özdeşliği",
            tags=frozenset({"propagator"}),
            priority=20,
        )

    def _worst_defect(self, fam: IEvolutionFamily, pairs: int) -> float:
        rng = np.random.default_rng(self.context.solver.estimate.seed)
        time_grid = fam.time_grid
        shape = (fam.n,) + fam.grid.shape
        worst = 0.0
        for _ in range(pairs):
            i, j = sorted(int(x) for x in rng.integers(0, time_grid.steps + 1, size=2))
            u = GridFunction(fam.grid, rng.standard_normal(shape))
            v = GridFunction(fam.grid, rng.standard_normal(shape))
            worst = max(worst, duality_defect(fam, time_grid.time_at(i), time_grid.time_at(j), u, v))
        return worst

    def _self_adjoint(self) -> bool:
        parameter = self.context.parameter
        if has_first_order_terms(parameter, self.context.box):
            return False
        return not any(c.is_time_dependent for c in parameter.components)

    def checks(self) -> List[CheckRecord]:
        fam = self.context.family
        if getattr(fam, "adjoint_mode", AdjointMode.TRANSPOSE) is not AdjointMode.TRANSPOSE:
            fam = self.context.build_family(adjoint_mode=AdjointMode.TRANSPOSE)

        records = [self.record("duality_transpose", self._worst_defect(fam, PAIRS), TRANSPOSE_TOLERANCE)]

        if self._self_adjoint():
            rediscretized = self.context.build_family(adjoint_mode=AdjointMode.REDISCRETIZE)
            records.append(self.record(
                "duality_rediscretize",
                self._worst_defect(rediscretized, PAIRS // 5),
                REDISCRETIZE_TOLERANCE,
            ))
        else:
            logger.info("Sistem kendine eşlenik ve zamandan bağımsız değil, yeniden ayrıklaştırma kontrolü atlanıyor")
        return records
