"""
Doğrulama Paketi: oracles
Tek parça θ-adımlaması ile uyum, dt yarılanırken Richardson azalması
ve özmod durumunda adımlar yöntemi kehaneti.
"""

from typing import List, Optional
import logging

import numpy as np

from ...core.registry import PluginMetadata
from ...domain import ConfigurationError, TimeGrid, lp_norms_over_time
from ..analysis.oracles import eigenmode_projection, oracle_method_of_steps, oracle_monolithic
from ..dtos import CheckRecord
from ..solvers import solve_marching
from .base_suite import VerificationSuite

logger = logging.getLogger(__name__)


MONOLITHIC_TOLERANCE = 1e-2
# e(dt/2)/e(dt) en fazla 1/1.6 (en az birinci mertebe azalma)
RICHARDSON_RATIO = 1.0 / 1.6
METHOD_OF_STEPS_TOLERANCE = 1e-3
# Bu değerin altındaki farklar yuvarlama gürültüsü sayılır
_NOISE_FLOOR = 1e-12


class OracleSuite(VerificationSuite):
    """Mild çözücülerin bağımsız kehanetlerle karşılaştırılması"""

    @classmethod
    def get_metadata(cls) -> PluginMetadata:
        return PluginMetadata(
            name="oracles",
            description="Tek parça adımlama, Richardson ve adımlar yöntemi kehanetleri",
            tags=frozenset({"mild", "oracle"}),
            priority=40,
        )

    def _monolithic_gap(self, dt: Optional[float] = None) -> float:
        ctx = self.context
        if dt is None:
            fam, h, time_grid = ctx.family, ctx.history, ctx.time_grid
        else:
            time_grid = TimeGrid(ctx.time_grid.t0, ctx.time_grid.T, dt)
            fam = ctx.build_family(time_grid=time_grid)
            h = ctx.build_history(dt)
        marching = solve_marching(ctx.parameter, fam, h, ctx.solver.quadrature)
        oracle = oracle_monolithic(ctx.parameter, ctx.grid, time_grid, h, fam)
        return float(np.max(lp_norms_over_time(marching.states - oracle.states, "2", ctx.grid.cell_volume)))

    def checks(self) -> List[CheckRecord]:
        ctx = self.context
        u = ctx.solve("marching")
        scale = max(1.0, float(np.max(lp_norms_over_time(u.states, "2", ctx.grid.cell_volume))))

        gap = self._monolithic_gap()
        records = [self.record("monolithic_vs_marching", gap, MONOLITHIC_TOLERANCE * scale)]
        records.extend(self._richardson(gap))
        records.extend(self._method_of_steps(u))
        return records

    def _richardson(self, gap: float) -> List[CheckRecord]:
        if gap <= _NOISE_FLOOR:
            logger.info("Tek parça kehanet ile fark yuvarlama düzeyinde, Richardson kontrolü atlanıyor")
            return []
        try:
            halved = self._monolithic_gap(0.5 * self.context.time_grid.dt)
        except ConfigurationError as e:
            logger.warning(f"Richardson kontrolü atlanıyor: {e}")
            return []
        ratio = halved / gap
        logger.info(f"Richardson: e(dt)={gap:.3e}, e(dt/2)={halved:.3e}, oran={ratio:.3f}")
        return [self.record("richardson_decay", ratio, RICHARDSON_RATIO)]

    def _method_of_steps(self, u) -> List[CheckRecord]:
        ctx = self.context
        projection = eigenmode_projection(ctx.parameter, ctx.grid, ctx.history)
        if projection is None:
            logger.info("Özmod izdüşümü uygulanamıyor, adımlar yöntemi kontrolü atlanıyor")
            return []

        amplitude = projection.amplitude
        oracle = oracle_method_of_steps(
            projection.lam,
            projection.c0,
            projection.c1,
            lambda t: amplitude,
            ctx.time_grid.T - ctx.time_grid.t0,
            ctx.time_grid.dt,
        )
        mode = projection.mode
        numeric = np.tensordot(u.states[:, 0], mode, axes=mode.ndim) / float(np.sum(mode * mode))
        count = min(numeric.size, oracle.values.size)
        error = float(np.max(np.abs(numeric[:count] - oracle.values[:count])))
        reference = max(float(np.max(np.abs(oracle.values))), 1e-300)
        return [self.record("method_of_steps", error / reference, METHOD_OF_STEPS_TOLERANCE)]
