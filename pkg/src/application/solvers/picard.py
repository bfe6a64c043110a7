"""
Picard İterasyonu
𝔊 daralma dönüşümü, ağırlıklı metrik d_μ ve global Picard çözücüsü.

v = u − U(·, s)u₀⁽¹⁾ üzerinde v₀ ≡ 0'dan başlayarak v_{j+1} = 𝔊(v_j) yinelenir.
Gecikmeli terim (ζ − 1 ≥ s) yeniden kurulan u = v + U(·, s)u₀⁽¹⁾ iteresinden okunur.
"""

import logging
import math
from typing import List, NamedTuple, Optional

import numpy as np

from ...domain import (
    ConvergenceError,
    GridMismatchError,
    HistorySegment,
    IEvolutionFamily,
    IProgressNotifier,
    MuAdjustedEvent,
    ParameterPoint,
    PicardSweepEvent,
    Provenance,
    Quadrature,
    TimeGrid,
    Trajectory,
    ValidationError,
    lp_norms_over_time,
)
from ..dtos import PicardConfig
from .coupling import CouplingSampler, check_history, delayed_values
from .duhamel import duhamel_trajectory

logger = logging.getLogger(__name__)


# Oranlar yalnızca önceki artış bu eşiğin (× ölçek) üzerindeyken kaydedilir
_RATIO_FLOOR = 1e-12
# Art arda bu kadar oran ≥ 1 ise daralma yok sayılır
_NON_CONTRACTION_LIMIT = 2


def auto_mu(n: int, K: float, M: float, gamma: float, horizon: float) -> float:
    """μ = 4n²KMe^{γT} (en az 1)"""
    return max(4.0 * n * n * K * M * math.exp(gamma * horizon), 1.0)


def contraction_bound(n: int, K: float, M: float, gamma: float, horizon: float, mu: float) -> float:
    """Daralma oranı üst sınırı 2n²KMe^{γT}/μ"""
    return 2.0 * n * n * K * M * math.exp(gamma * horizon) / mu


def weighted_metric(u: Trajectory, v: Trajectory, mu: float, p="2") -> float:
    """
    d_μ(u, v) = sup_t e^{−μ(t − t₀)}‖u(t) − v(t)‖_{L_p}, t₀ ızgaranın başlangıcı.

    Raises:
        GridMismatchError: Farklı zaman veya uzay ızgarası
    """
    if u.time_grid != v.time_grid or u.grid != v.grid or u.n != v.n:
        raise GridMismatchError("d_μ için aynı zaman ızgarası ve aynı uzay ızgarası gerekli")
    return _weighted_distance(u.states - v.states, u.times - u.time_grid.t0, mu, p, u.grid.cell_volume)[0]


def _weighted_distance(difference, offsets, mu, p, cell_volume):
    norms = lp_norms_over_time(difference, p, cell_volume)
    return float(np.max(np.exp(-mu * offsets) * norms)), float(np.max(norms))


class PicardSolution(NamedTuple):
    """Picard sonucu: yörünge, süpürme sayısı, kaydedilen oranlar ve kullanılan μ"""
    trajectory: Trajectory
    iterations: int
    ratios: List[float]
    mu: float


class PicardSolver:
    """
    Bir (a, U, u₀) üçlüsü için 𝔊 dönüşümü ve sabit nokta iterasyonu.
    start, ailenin zaman ızgarasındaki başlangıç indeksidir.
    """

    def __init__(
        self,
        parameter: ParameterPoint,
        fam: IEvolutionFamily,
        history: HistorySegment,
        quadrature: Quadrature = Quadrature.TRAPEZOID,
        start: int = 0,
        sampler: Optional[CouplingSampler] = None,
    ):
        check_history(history, fam)
        if parameter.n != fam.n:
            raise GridMismatchError(f"Parametre n={parameter.n}, evolüsyon ailesi n={fam.n}")
        self.parameter = parameter
        self.fam = fam
        self.history = history
        self.quadrature = Quadrature.parse(quadrature)
        self.start = start
        self.sampler = sampler or CouplingSampler(parameter, fam)

        time_grid = fam.time_grid
        self.count = time_grid.steps - start + 1
        if self.count < 2:
            raise ValidationError(f"Başlangıç indeksi {start} ufka çok yakın")
        self.local_grid = time_grid.with_span(time_grid.time_at(start), time_grid.T)
        self._free: Optional[np.ndarray] = None

    @property
    def free_evolution(self) -> np.ndarray:
        """w_j = U(t_j, s)u₀⁽¹⁾"""
        if self._free is None:
            free = np.empty((self.count, self.fam.n) + self.fam.grid.shape)
            free[0] = self.history.head.values
            for j in range(self.count - 1):
                free[j + 1] = self.fam.step(self.start + j, free[j])
            self._free = free
        return self._free

    def source(self, u_values: np.ndarray) -> np.ndarray:
        """f_j = 𝒞⁰(t_j)u_j + 𝒞¹(t_j)u(t_j − 1)"""
        tail = self.history.tail
        f = np.empty_like(u_values)
        for j in range(self.count):
            index = self.start + j
            f[j] = self.sampler.apply(0, index, u_values[j])
            f[j] += self.sampler.apply(1, index, delayed_values(tail, u_values, j))
        return f

    def apply_values(self, v_values: np.ndarray) -> np.ndarray:
        """𝔊(v) düğüm değerleri"""
        u_values = v_values + self.free_evolution
        return duhamel_trajectory(self.fam, self.source(u_values), self.quadrature, self.start)

    def apply(self, v: Trajectory) -> Trajectory:
        """
        𝔊_{a,u₀}(v).

        Raises:
            ValidationError: v(s) ≠ 0
            GridMismatchError: v farklı ızgarada
        """
        if v.time_grid != self.local_grid or v.grid != self.fam.grid or v.n != self.fam.n:
            raise GridMismatchError("v, [s, T] zaman ızgarasında ve ailenin uzay ızgarasında olmalıdır")
        if np.any(v.states[0] != 0.0):
            raise ValidationError("𝔊 yalnızca v(s) = 0 olan yörüngelere uygulanır")
        return Trajectory(self.local_grid, self.fam.grid, self.apply_values(v.states), Provenance.PICARD)

    def to_solution(self, v_values: np.ndarray, provenance: Provenance = Provenance.PICARD) -> Trajectory:
        """u = v + U(·, s)u₀⁽¹⁾, [s − 1, s) üzerinde geçmişle genişletilmiş"""
        return assemble_trajectory(self.fam, self.history, self.start, v_values + self.free_evolution, provenance)

    def residual(self, u: Trajectory) -> float:
        """sup_t ‖u(t) − U(t,s)u₀⁽¹⁾ − 𝔊(v)(t)‖_∞, v = u − U(·,s)u₀⁽¹⁾"""
        m = self.history.steps_per_delay
        v_values = np.asarray(u.states[m:]) - self.free_evolution
        if v_values.shape[0] != self.count:
            raise GridMismatchError("Yörünge çözücünün zaman ızgarasıyla uyumsuz")
        return float(np.max(np.abs(v_values - self.apply_values(v_values))))

    def _scale(self) -> float:
        free = float(np.max(np.abs(self.free_evolution))) if self.free_evolution.size else 0.0
        tail = float(np.max(np.abs(self.history.tail))) if self.history.tail.size else 0.0
        return max(free, tail, 1.0)

    def solve(self, cfg: PicardConfig, mu: float, notifier: Optional[IProgressNotifier] = None) -> PicardSolution:
        """
        v₀ ≡ 0'dan süpürmeler; d_μ < tol ve ağırlıksız sup artış < tol olunca durur.

        Raises:
            ConvergenceError: max_iters aşıldı veya daralma yok (adaptive kapalı)
        """
        offsets = self.local_grid.times - self.local_grid.t0
        volume = self.fam.grid.cell_volume
        floor = _RATIO_FLOOR * self._scale()
        total_sweeps = 0

        v = np.zeros_like(self.free_evolution)
        previous: Optional[float] = None
        ratios: List[float] = []
        non_contraction = 0

        logger.info(f"Picard başlıyor: μ={mu:.6g}, tol={cfg.tol:g}, p={cfg.p}, {self.count - 1} adım")

        while total_sweeps < cfg.max_iters:
            total_sweeps += 1
            v_next = self.apply_values(v)
            distance, sup_increment = _weighted_distance(v_next - v, offsets, mu, cfg.p, volume)

            ratio = None
            if previous is not None and previous > floor:
                ratio = distance / previous
                ratios.append(ratio)

            if notifier:
                notifier.notify_sweep(PicardSweepEvent(
                    iteration=total_sweeps,
                    distance=distance,
                    sup_increment=sup_increment,
                    ratio=ratio,
                    mu=mu,
                ))

            v = v_next
            if distance < cfg.tol and sup_increment < cfg.tol:
                logger.info(f"Picard yakınsadı: {total_sweeps} süpürme, d_μ={distance:.3e}")
                return PicardSolution(self.to_solution(v), total_sweeps, ratios, mu)

            non_contraction = non_contraction + 1 if ratio is not None and ratio >= 1.0 else 0
            if non_contraction >= _NON_CONTRACTION_LIMIT:
                if not cfg.adaptive:
                    raise ConvergenceError(
                        f"Daralma gözlenmedi (μ={mu:.6g})",
                        f"son oranlar: {ratios[-_NON_CONTRACTION_LIMIT:]}",
                    )
                new_mu = 2.0 * mu
                if notifier:
                    notifier.notify_mu_adjusted(MuAdjustedEvent(
                        previous_mu=mu, new_mu=new_mu, reason="art arda iki oran ≥ 1",
                    ))
                logger.warning(f"Daralma yok, μ ikiye katlanıyor: {mu:.6g} → {new_mu:.6g}")
                mu = new_mu
                v = np.zeros_like(v)
                previous = None
                ratios = []
                non_contraction = 0
                continue

            previous = distance

        raise ConvergenceError(f"Picard {cfg.max_iters} süpürmede yakınsamadı", f"μ={mu:.6g}, tol={cfg.tol:g}")


def assemble_trajectory(
    fam: IEvolutionFamily,
    history: HistorySegment,
    start: int,
    u_values: np.ndarray,
    provenance: Provenance,
) -> Trajectory:
    """[s − 1, T] yörüngesi: geçmiş kuyruğu + çözülmüş düğümler"""
    time_grid = fam.time_grid
    s = time_grid.time_at(start)
    full_grid = TimeGrid(s - 1.0, time_grid.T, time_grid.dt)
    states = np.concatenate([history.tail, u_values], axis=0)
    return Trajectory(full_grid, fam.grid, states, provenance)


def start_index(fam: IEvolutionFamily, s: Optional[float]) -> int:
    """Başlangıç zamanı s'nin ailedeki indeksi (None: ailenin başlangıcı)"""
    return 0 if s is None else fam.time_grid.index_of(s)


def gothic_g_apply(
    a: ParameterPoint,
    fam: IEvolutionFamily,
    h: HistorySegment,
    v: Trajectory,
    quadrature: Quadrature = Quadrature.TRAPEZOID,
) -> Trajectory:
    """𝔊_{a,u₀}(v); v'nin zaman ızgarası [s, T]"""
    solver = PicardSolver(a, fam, h, quadrature, start_index(fam, v.time_grid.t0))
    return solver.apply(v)


def solve_picard(
    a: ParameterPoint,
    fam: IEvolutionFamily,
    h: HistorySegment,
    cfg: PicardConfig,
    M: Optional[float] = None,
    gamma: Optional[float] = None,
    K: Optional[float] = None,
    s: Optional[float] = None,
    notifier: Optional[IProgressNotifier] = None,
) -> PicardSolution:
    """
    Global Picard çözümü.
    cfg.mu None ise μ, verilen (M, γ, K) ile otomatik seçilir.

    Raises:
        ValidationError: Otomatik μ için sabitler eksik
        ConvergenceError: Yakınsama başarısız
    """
    solver = PicardSolver(a, fam, h, cfg.quadrature, start_index(fam, s))
    mu = cfg.mu
    if mu is None:
        if M is None or gamma is None or K is None:
            raise ValidationError("μ otomatik seçimi için M, γ ve K gerekli")
        horizon = fam.time_grid.T - solver.local_grid.t0
        mu = auto_mu(a.n, K, M, gamma, horizon)
        logger.info(f"μ otomatik seçildi: {mu:.6g} (n={a.n}, K={K:.4g}, M={M:.4g}, γ={gamma:.4g})")
    return solver.solve(cfg, mu, notifier)
