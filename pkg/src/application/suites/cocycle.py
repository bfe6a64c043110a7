"""
Doğrulama Paketi: cocycle
U(s,s) = Id, U(t₂,t₁)U(t₁,s) = U(t₂,s) ve örtük Euler karşılaştırma ilkesi.
"""

from typing import List
import logging

import numpy as np

from ...core.registry import PluginMetadata
from ...domain import GridFunction, Scheme, lp_norm
from ..dtos import CheckRecord
from ..services.propagator_analysis import cocycle_check, comparison_principle_check
from ..services.validation import has_first_order_terms
from .base_suite import VerificationSuite

logger = logging.getLogger(__name__)


TRIPLES = 20
EXPONENTS = ("1", "2", "inf")
RELATIVE_TOLERANCE = 1e-12


class CocycleSuite(VerificationSuite):
    """Evolüsyon ailesinin iki parametreli yarı grup özellikleri"""

    @classmethod
    def get_metadata(cls) -> PluginMetadata:
        return PluginMetadata(
            name="cocycle",
            description="Birim ve bileşim özdeşlikleri, karşılaştırma ilkesi",
            tags=frozenset({"propagator"}),
            priority=10,
        )

    def checks(self) -> List[CheckRecord]:
        fam = self.context.family
        time_grid = fam.time_grid
        rng = np.random.default_rng(self.context.solver.estimate.seed)
        shape = (fam.n,) + fam.grid.shape

        worst = {p: 0.0 for p in EXPONENTS}
        identity = 0.0
        for _ in range(TRIPLES):
            i, j, k = sorted(int(x) for x in rng.integers(0, time_grid.steps + 1, size=3))
            s, t1, t2 = time_grid.time_at(i), time_grid.time_at(j), time_grid.time_at(k)
            u = GridFunction(fam.grid, rng.standard_normal(shape))
            for p in EXPONENTS:
                residual = cocycle_check(fam, s, t1, t2, u, p)
                worst[p] = max(worst[p], residual / max(lp_norm(u, p), 1e-300))
            identity = max(identity, float(np.max(np.abs(fam.propagate(s, s, u).values - u.values))))

        records = [
            self.record(f"cocycle_composition_p{p}", worst[p], RELATIVE_TOLERANCE)
            for p in EXPONENTS
        ]
        records.append(self.record("cocycle_identity", identity, 0.0))
        records.extend(self._comparison(rng, shape))
        return records

    def _comparison(self, rng: np.random.Generator, shape) -> List[CheckRecord]:
        """Birinci mertebe terim yoksa örtük Euler negatif olmayan veriyi korur"""
        if has_first_order_terms(self.context.parameter, self.context.box):
            logger.info("Birinci mertebe terimler var, karşılaştırma ilkesi atlanıyor")
            return []
        fam = self.context.build_family(scheme=Scheme.IMPLICIT_EULER)
        u = GridFunction(fam.grid, np.abs(rng.standard_normal(shape)))
        smallest = comparison_principle_check(fam, u)
        scale = float(np.max(u.values))
        return [self.record("comparison_principle", max(0.0, -smallest), RELATIVE_TOLERANCE * scale)]
