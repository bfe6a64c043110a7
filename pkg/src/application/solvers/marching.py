"""
Adım Adım Çözücü
Tek adımlı Duhamel özyinelemesi ve öteleme özdeşliği kontrolü.

  yamuk:          (I − dt/2·𝒞⁰_{j+1}) u_{j+1} = Φ_j(u_j + dt/2·f_j) + dt/2·𝒞¹_{j+1} u(t_{j+1} − 1)
  sol dikdörtgen: u_{j+1} = Φ_j(u_j + dt·f_j)

f_j = 𝒞⁰_j u_j + 𝒞¹_j u(t_j − 1). Gecikmeli değerler zaten hesaplanmış düğümlerden okunur.
"""

import logging
from typing import Optional

import numpy as np

from ...domain import (
    HistorySegment,
    IEvolutionFamily,
    OffGridTimeError,
    ParameterPoint,
    Provenance,
    Quadrature,
    Trajectory,
    ValidationError,
    lp_norms_over_time,
)
from ..dtos import PicardConfig
from .coupling import CouplingSampler, check_history, delayed_values
from .picard import assemble_trajectory, solve_picard, start_index

logger = logging.getLogger(__name__)


def _solve_local(fields: np.ndarray, weight: float, rhs: np.ndarray) -> np.ndarray:
    """Düğüm başına (I − weight·c) x = rhs, c şekli (n, n, *hücreler)"""
    n = fields.shape[0]
    spatial = fields.shape[2:]
    matrices = np.moveaxis(fields.reshape(n, n, -1), -1, 0)
    matrices = np.eye(n)[np.newaxis] - weight * matrices
    vectors = np.moveaxis(rhs.reshape(n, -1), -1, 0)[..., np.newaxis]
    solution = np.linalg.solve(matrices, vectors)[..., 0]
    return np.moveaxis(solution, 0, -1).reshape((n,) + spatial)


def solve_marching(
    a: ParameterPoint,
    fam: IEvolutionFamily,
    h: HistorySegment,
    quadrature: Quadrature = Quadrature.TRAPEZOID,
    s: Optional[float] = None,
    sampler: Optional[CouplingSampler] = None,
) -> Trajectory:
    """
    Bağlaşık gecikmeli sistemin adım adım mild çözümü.
    Yamuk kuralının yerel örtüklüğü düğüm başına n×n çözümle kesin olarak giderilir.
    """
    check_history(h, fam)
    quadrature = Quadrature.parse(quadrature)
    sampler = sampler or CouplingSampler(a, fam)
    start = start_index(fam, s)
    count = fam.time_grid.steps - start + 1
    if count < 2:
        raise ValidationError(f"Başlangıç indeksi {start} ufka çok yakın")

    dt = fam.time_grid.dt
    tail = h.tail
    u = np.empty((count, fam.n) + fam.grid.shape)
    u[0] = h.head.values
    coupled = not (sampler.is_zero(0) and sampler.is_zero(1))

    for j in range(count - 1):
        index = start + j
        if not coupled:
            u[j + 1] = fam.step(index, u[j])
            continue

        f_j = sampler.apply(0, index, u[j]) + sampler.apply(1, index, delayed_values(tail, u, j))
        if quadrature is Quadrature.LEFT_RECTANGLE:
            u[j + 1] = fam.step(index, u[j] + dt * f_j)
            continue

        rhs = fam.step(index, u[j] + 0.5 * dt * f_j)
        rhs += 0.5 * dt * sampler.apply(1, index + 1, delayed_values(tail, u, j + 1))
        if sampler.is_zero(0):
            u[j + 1] = rhs
        else:
            u[j + 1] = _solve_local(sampler.fields(0, index + 1), 0.5 * dt, rhs)

    logger.debug(f"Adım adım çözüm tamamlandı: {count - 1} adım, kuadratür={quadrature.value}")
    return assemble_trajectory(fam, h, start, u, Provenance.MARCHING)


def translation_check(
    u: Trajectory,
    a: ParameterPoint,
    fam: IEvolutionFamily,
    theta: float,
    quadrature: Quadrature = Quadrature.TRAPEZOID,
    p="2",
    method: str = "marching",
    picard: Optional[PicardConfig] = None,
    mu: Optional[float] = None,
) -> float:
    """
    R(u)[θ] geçmişinden θ anından yeniden çözer;
    sup_{t∈[θ,T]} ‖u(t) − u_θ(t)‖_{L_p} döner.

    Raises:
        OffGridTimeError: θ ızgarada değil veya θ ≥ T
    """
    if theta >= fam.time_grid.T:
        raise OffGridTimeError(f"θ < T olmalıdır, alınan: θ={theta}")
    theta_index = u.time_grid.index_of(theta)
    restart = u.history_at(theta)

    if method == "picard":
        cfg = picard or PicardConfig(quadrature=quadrature)
        if cfg.mu is None and mu is None:
            raise ValidationError("Picard ile öteleme kontrolü için μ gerekli")
        if cfg.mu is None:
            cfg = PicardConfig(mu=mu, tol=cfg.tol, max_iters=cfg.max_iters,
                               quadrature=cfg.quadrature, adaptive=cfg.adaptive, p=cfg.p)
        translated = solve_picard(a, fam, restart, cfg, s=theta).trajectory
    else:
        translated = solve_marching(a, fam, restart, quadrature, s=theta)

    m = restart.steps_per_delay
    difference = np.asarray(u.states[theta_index:]) - np.asarray(translated.states[m:])
    return float(np.max(lp_norms_over_time(difference, p, u.grid.cell_volume)))
