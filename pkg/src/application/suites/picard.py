"""
Doğrulama Paketi: picard
Daralma oranları, süpürme sayısı, adım adım çözücüyle uyum, teklik,
artık, başlangıç verisinde lineerlik, p'den bağımsızlık ve öteleme özdeşliği.
"""

from dataclasses import replace
from typing import List
import logging
import math

import numpy as np

from ...core.registry import PluginMetadata
from ...domain import GridFunction, HistorySegment, lp_norms_over_time
from ..dtos import CheckRecord
from ..solvers import PicardSolver, contraction_bound, solve_marching, solve_picard, translation_check
from .base_suite import VerificationSuite

logger = logging.getLogger(__name__)


RATIO_SLACK = 0.05
LINEARITY_TOLERANCE = 1e-9
TRANSLATION_TOLERANCE = 1e-8
TRANSLATION_THETA = 0.5


def _sup_gap(a: np.ndarray, b: np.ndarray, cell_volume: float) -> float:
    return float(np.max(lp_norms_over_time(np.asarray(a) - np.asarray(b), "2", cell_volume)))


class PicardSuite(VerificationSuite):
    """Global Picard iterasyonunun ve mild çözümün özellikleri"""

    @classmethod
    def get_metadata(cls) -> PluginMetadata:
        return PluginMetadata(
            name="picard",
            description="𝔊 daralması, çözücü denkliği, lineerlik ve öteleme",
            tags=frozenset({"mild"}),
            priority=30,
        )

    def checks(self) -> List[CheckRecord]:
        ctx = self.context
        cfg = ctx.solver.picard
        solution = ctx.picard()
        u = solution.trajectory
        volume = ctx.grid.cell_volume
        M, gamma = ctx.fit(cfg.p, cfg.p)
        bound = contraction_bound(ctx.parameter.n, ctx.K, M, gamma, ctx.horizon, solution.mu)
        agreement = max(1e-8, 10.0 * cfg.tol)

        records = [self.record("contraction_ratio", max(solution.ratios, default=0.0), bound + RATIO_SLACK)]

        rate = bound + RATIO_SLACK
        if rate < 1.0:
            allowed = math.ceil(math.log(cfg.tol) / math.log(rate)) + 2
            records.append(self.record("iteration_count", solution.iterations, allowed))

        marching = solve_marching(ctx.parameter, ctx.family, ctx.history, cfg.quadrature)
        records.append(self.record("picard_vs_marching", _sup_gap(u.states, marching.states, volume), agreement))

        doubled = solve_picard(ctx.parameter, ctx.family, ctx.history, replace(cfg, mu=2.0 * solution.mu))
        records.append(self.record(
            "uniqueness_double_mu", _sup_gap(u.states, doubled.trajectory.states, volume), 2.0 * cfg.tol,
        ))

        solver = PicardSolver(ctx.parameter, ctx.family, ctx.history, cfg.quadrature)
        records.append(self.record("integral_residual", solver.residual(u), 5.0 * cfg.tol))

        for p in ("1", "inf"):
            other = solve_picard(ctx.parameter, ctx.family, ctx.history, replace(cfg, p=p, mu=solution.mu))
            records.append(self.record(
                f"p_independence_p{p}", _sup_gap(u.states, other.trajectory.states, volume), agreement,
            ))

        records.append(self._linearity())
        if ctx.time_grid.t0 + TRANSLATION_THETA < ctx.time_grid.T:
            distance = translation_check(
                marching, ctx.parameter, ctx.family, ctx.time_grid.t0 + TRANSLATION_THETA, cfg.quadrature,
            )
            records.append(self.record("translation", distance, TRANSLATION_TOLERANCE))
        return records

    def _linearity(self) -> CheckRecord:
        """u(αh₁ + βh₂) = αu(h₁) + βu(h₂)"""
        ctx = self.context
        quadrature = ctx.solver.picard.quadrature
        rng = np.random.default_rng(ctx.solver.estimate.seed)
        h1 = ctx.history
        h2 = HistorySegment.constant(
            GridFunction(ctx.grid, rng.standard_normal((ctx.parameter.n,) + ctx.grid.shape)),
            ctx.time_grid.dt,
            h1.r,
        )
        alpha, beta = 2.0, -0.5

        u1 = solve_marching(ctx.parameter, ctx.family, h1, quadrature)
        u2 = solve_marching(ctx.parameter, ctx.family, h2, quadrature)
        combined = solve_marching(ctx.parameter, ctx.family, h1.scaled_sum(alpha, h2, beta), quadrature)

        expected = alpha * u1.states + beta * u2.states
        scale = max(1.0, float(np.max(lp_norms_over_time(expected, "2", ctx.grid.cell_volume))))
        gap = _sup_gap(combined.states, expected, ctx.grid.cell_volume)
        return self.record("linearity", gap, LINEARITY_TOLERANCE * scale)
