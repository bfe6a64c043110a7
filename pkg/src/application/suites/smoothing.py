"""
Doğrulama Paketi: smoothing
Gösterge verisi için log-log eğim ≈ −N/2 ve her q ≥ p için
(t − s)^δ‖u(t)‖_{L_q} ≤ M̄‖u₀‖ (ya da çizelgeli durum).
"""

from typing import List
import logging

from ...core.registry import PluginMetadata
from ...domain import Exponent, ScheduleRequiredError, Scheme
from ..analysis.verification import verify_smoothing
from ..dtos import CheckRecord
from ..services.propagator_analysis import fit_smoothing_slope
from .base_suite import VerificationSuite

logger = logging.getLogger(__name__)


SLOPE_TOLERANCE = 0.10
# Eğim penceresi [10·dt, 100·dt]
SLOPE_WINDOW = (10, 100)


class SmoothingSuite(VerificationSuite):
    """L_p → L_q düzleştirme"""

    @classmethod
    def get_metadata(cls) -> PluginMetadata:
        return PluginMetadata(
            name="smoothing",
            description="Isı çekirdeği eğimi ve M̄ düzleştirme sınırı",
            tags=frozenset({"estimate"}),
            priority=60,
        )

    def checks(self) -> List[CheckRecord]:
        return self._slope() + self._bounds()

    def _slope(self) -> List[CheckRecord]:
        ctx = self.context
        dt = ctx.time_grid.dt
        t_lo, t_hi = SLOPE_WINDOW[0] * dt, SLOPE_WINDOW[1] * dt
        if ctx.time_grid.t0 + t_hi > ctx.time_grid.T:
            logger.warning(f"Eğim penceresi ufku aşıyor ({t_hi:g}), eğim kontrolü atlanıyor")
            return []
        fam = ctx.build_family(scheme=Scheme.IMPLICIT_EULER)
        slope = fit_smoothing_slope(fam, t_lo, t_hi)
        expected = -0.5 * ctx.grid.dim
        logger.info(f"Düzleştirme eğimi: {slope:.4f} (beklenen {expected})")
        return [self.record("smoothing_slope", abs(slope - expected), SLOPE_TOLERANCE * abs(expected))]

    def _bounds(self) -> List[CheckRecord]:
        ctx = self.context
        p = Exponent.parse(ctx.solver.p)
        trajectory = ctx.solve()
        records = []
        for raw in ctx.output.norms_q:
            q = Exponent.parse(raw)
            if q.reciprocal > p.reciprocal:
                continue
            try:
                report = verify_smoothing(trajectory, ctx.history, ctx.constants(str(p), str(q)), str(p), str(q))
            except ScheduleRequiredError as e:
                logger.warning(f"q={q} için düzleştirme atlanıyor: {e}")
                continue
            records.append(CheckRecord.from_estimate(self.get_name(), report))
        return records
