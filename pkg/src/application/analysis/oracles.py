"""
Bağımsız Kehanetler
Özmod izdüşümlü gecikmeli ODE için adımlar yöntemi ve Duhamel ayrıştırması
kullanmayan tek parça θ-adımlaması.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np
from scipy.integrate import solve_ivp

from ...domain import (
    BoundaryKind,
    GridMismatchError,
    HistorySegment,
    IEvolutionFamily,
    ParameterPoint,
    Provenance,
    SpatialGrid,
    TimeGrid,
    Trajectory,
    ValidationError,
)
from ..solvers import CouplingSampler, assemble_trajectory, check_history, delayed_values

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScalarTrajectory:
    """[−1, T] ızgarasında skaler yörünge y(t)"""
    times: np.ndarray
    values: np.ndarray

    def at(self, t: float) -> float:
        index = int(np.argmin(np.abs(self.times - t)))
        return float(self.values[index])


def oracle_method_of_steps(
    lam: float,
    c0: float,
    c1: float,
    history: Callable[[float], float],
    T: float,
    dt: float,
    rtol: float = 1e-11,
    atol: float = 1e-13,
) -> ScalarTrajectory:
    """
    y′ = (−λ + c₀)y + c₁y(t − 1), [−1, 0] üzerinde y = history.
    Her [k, k+1] aralığı önceki aralığın yoğun çıktısıyla ayrı bir ODE olarak çözülür.
    """
    time_grid = TimeGrid(-1.0, T, dt)
    times = time_grid.times
    rate = -lam + c0

    segments: List = []
    y_start = float(history(0.0))
    k = 0
    while k < T:
        t_end = min(k + 1.0, T)
        previous = segments[-1] if segments else None

        def rhs(t, y, previous=previous):
            lagged = previous.sol(t - 1.0)[0] if previous is not None else history(t - 1.0)
            return [rate * y[0] + c1 * lagged]

        solution = solve_ivp(rhs, (k, t_end), [y_start], method="DOP853",
                             rtol=rtol, atol=atol, dense_output=True)
        if not solution.success:
            raise ValidationError(f"Adımlar yöntemi [{k}, {t_end}] aralığında başarısız", solution.message)
        segments.append(solution)
        y_start = float(solution.y[0, -1])
        k += 1

    values = np.empty_like(times)
    for i, t in enumerate(times):
        if t < -1e-12:
            values[i] = history(t)
        else:
            segment = min(int(math.floor(t + 1e-12)), len(segments) - 1)
            values[i] = segments[segment].sol(min(t, T))[0]
    logger.debug(f"Adımlar yöntemi: {len(segments)} aralık, λ={lam}, c0={c0}, c1={c1}")
    return ScalarTrajectory(times=times, values=values)


def oracle_monolithic(
    a: ParameterPoint,
    grid: SpatialGrid,
    time_grid: TimeGrid,
    h: HistorySegment,
    fam: IEvolutionFamily,
) -> Trajectory:
    """
    Bağlaşım ve gecikme açık ele alınarak tek θ-adımında:
      u_{j+1} = (I + θdtA_{j+1})⁻¹[(I − (1−θ)dtA_j)u_j + dt(𝒞⁰_j u_j + 𝒞¹_j u(t_j − 1))]

    fam yalnızca θ-adımının iki yarısı için kullanılır; ızgaraları grid ve time_grid olmalı.

    Raises:
        GridMismatchError: Aile farklı bir ızgarada kurulmuş
    """
    if fam.grid != grid or fam.time_grid != time_grid:
        raise GridMismatchError("Tek parça kehanet için aile verilen ızgaralarda kurulmalı")
    check_history(h, fam)
    sampler = CouplingSampler(a, fam)
    dt = time_grid.dt
    count = time_grid.steps + 1

    u = np.empty((count, fam.n) + grid.shape)
    u[0] = h.head.values
    for j in range(count - 1):
        forcing = sampler.apply(0, j, u[j]) + sampler.apply(1, j, delayed_values(h.tail, u, j))
        u[j + 1] = fam.implicit_solve(j + 1, fam.explicit_part(j, u[j]) + dt * forcing)
    return assemble_trajectory(fam, h, 0, u, Provenance.ORACLE)


@dataclass(frozen=True)
class EigenmodeProjection:
    """Tek sinüs moduna izdüşen skaler gecikmeli problem"""
    lam: float
    c0: float
    c1: float
    amplitude: float
    mode: np.ndarray


def _is_constant(values: np.ndarray) -> bool:
    return bool(np.ptp(values) <= 1e-14 * max(1.0, float(np.max(np.abs(values)))))


def eigenmode_projection(a: ParameterPoint, grid: SpatialGrid, h: HistorySegment) -> Optional[EigenmodeProjection]:
    """
    n = 1, N = 1, Dirichlet, sabit katsayılı ve birinci mertebe terimsiz sistemde
    head = A·sin(π(x − lo)/L) ve kuyruk sabit head ise izdüşümü döner; aksi halde None.
    """
    if a.n != 1 or a.N != 1:
        return None
    component = a.components[0]
    if component.bc is not BoundaryKind.DIRICHLET or component.is_time_dependent:
        return None
    if a.coupling_is_time_dependent(0) or a.coupling_is_time_dependent(1):
        return None

    diffusion = component.a[0][0].sample(0.0, grid)
    zero_terms = [component.a_first[0], component.b_first[0], component.d0]
    if not _is_constant(diffusion) or any(np.any(e.sample(0.0, grid)) for e in zero_terms):
        return None
    c0_field = a.coupling_fields(0, 0.0, grid)[0, 0]
    c1_field = a.coupling_fields(1, 0.0, grid)[0, 0]
    if not (_is_constant(c0_field) and _is_constant(c1_field)):
        return None

    lo, hi = grid.extents[0]
    length = hi - lo
    mode = np.sin(math.pi * (grid.coordinates["x1"] - lo) / length)
    head = h.head.values[0]
    amplitude = float(np.sum(head * mode) / np.sum(mode * mode))
    scale = max(float(np.max(np.abs(head))), 1e-300)
    if np.max(np.abs(head - amplitude * mode)) > 1e-10 * scale:
        return None
    if np.max(np.abs(h.tail - h.head.values[np.newaxis])) > 1e-10 * scale:
        return None

    return EigenmodeProjection(
        lam=float(diffusion.flat[0]) * (math.pi / length) ** 2,
        c0=float(c0_field.flat[0]),
        c1=float(c1_field.flat[0]),
        amplitude=amplitude,
        mode=mode,
    )
