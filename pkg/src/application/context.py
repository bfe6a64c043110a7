"""
Çalıştırma Bağlamı
Bir RunConfig'ten kurulan nesneler (parametre noktası, evolüsyon ailesi,
başlangıç verisi) ve bunlardan türetilen önbellekli büyüklükler:
K, uydurulmuş (M, γ), çözülmüş yörünge.
"""

import logging
import threading
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple

from ..domain import (
    AdjointMode,
    ConfigurationError,
    Exponent,
    HistorySegment,
    IEvolutionFamily,
    IProgressNotifier,
    ParameterPoint,
    SampleBox,
    Scheme,
    SpatialGrid,
    TimeGrid,
    Trajectory,
)
from .analysis.bounds import BoundConstants
from .dtos import OutputSettings, PicardConfig, SolverSettings, StudySettings
from .services.multiplication import sup_bound_K
from .services.progress_notifier import SilentProgressNotifier
from .services.propagator_analysis import estimate_M_gamma
from .solvers import PicardSolution, auto_mu, solve_marching, solve_picard

logger = logging.getLogger(__name__)


# builder(parameter, scheme=None, time_grid=None, adjoint_mode=None) -> IEvolutionFamily
FamilyBuilder = Callable[..., IEvolutionFamily]
# history_builder(dt) -> HistorySegment
HistoryBuilder = Callable[[float], HistorySegment]


@dataclass
class RunContext:
    """
    Use case'lerin ve doğrulama paketlerinin paylaştığı bağlam.
    Türetilmiş büyüklükler ilk kullanımda hesaplanıp saklanır.
    """

    parameter: ParameterPoint
    family: IEvolutionFamily
    history: HistorySegment
    box: SampleBox
    solver: SolverSettings = field(default_factory=SolverSettings)
    output: OutputSettings = field(default_factory=OutputSettings)
    study: Optional[StudySettings] = None
    notifier: IProgressNotifier = field(default_factory=SilentProgressNotifier)
    threads: int = 1
    builder: Optional[FamilyBuilder] = None
    history_builder: Optional[HistoryBuilder] = None
    config_hash: str = ""

    _K: Optional[float] = field(default=None, init=False, repr=False)
    _fits: Dict[Tuple[str, str], Tuple[float, float]] = field(default_factory=dict, init=False, repr=False)
    _solutions: Dict[str, Trajectory] = field(default_factory=dict, init=False, repr=False)
    _picard: Optional[PicardSolution] = field(default=None, init=False, repr=False)
    _lock: threading.RLock = field(default_factory=threading.RLock, init=False, repr=False)

    @property
    def grid(self) -> SpatialGrid:
        return self.family.grid

    @property
    def time_grid(self) -> TimeGrid:
        return self.family.time_grid

    @property
    def horizon(self) -> float:
        return self.time_grid.T - self.time_grid.t0

    @property
    def K(self) -> float:
        """Örneklenmiş K = sup |c_i^{kl}|"""
        with self._lock:
            if self._K is None:
                self._K = sup_bound_K([self.parameter], self.box)
            return self._K

    def fit(self, p="2", q=None) -> Tuple[float, float]:
        """Önbellekli estimate_M_gamma"""
        p_key = str(Exponent.parse(p))
        q_key = str(Exponent.parse(q if q is not None else p))
        with self._lock:
            if (p_key, q_key) not in self._fits:
                settings = self.solver.estimate
                self._fits[(p_key, q_key)] = estimate_M_gamma(
                    self.family, p_key, q_key,
                    samples=settings.samples,
                    seed=settings.seed,
                    power_iterations=settings.power_iterations,
                )
            return self._fits[(p_key, q_key)]

    def constants(self, p="2", q=None) -> BoundConstants:
        """(p, p) ve (p, q) uydurmalarının büyüğü ile sınır sabitleri"""
        M, gamma = self.fit(p, p)
        if q is not None and str(Exponent.parse(q)) != str(Exponent.parse(p)):
            M_q, gamma_q = self.fit(p, q)
            M, gamma = max(M, M_q), max(gamma, gamma_q)
        return BoundConstants(M=M, gamma=gamma, K=self.K, n=self.parameter.n, N=self.grid.dim, T=self.horizon)

    def mu(self, cfg: Optional[PicardConfig] = None) -> float:
        """Yapılandırılmış μ ya da 4n²KMe^{γT}"""
        cfg = cfg or self.solver.picard
        if cfg.mu is not None:
            return cfg.mu
        M, gamma = self.fit(cfg.p, cfg.p)
        return auto_mu(self.parameter.n, self.K, M, gamma, self.horizon)

    def picard(self) -> PicardSolution:
        with self._lock:
            if self._picard is None:
                cfg = self.solver.picard
                M, gamma = self.fit(cfg.p, cfg.p)
                self._picard = solve_picard(
                    self.parameter, self.family, self.history, cfg,
                    M=M, gamma=gamma, K=self.K, notifier=self.notifier,
                )
            return self._picard

    def solve(self, method: Optional[str] = None) -> Trajectory:
        """Yapılandırılmış (ya da verilen) yöntemle mild çözüm"""
        method = method or self.solver.method
        with self._lock:
            if method not in self._solutions:
                if method == "picard":
                    self._solutions[method] = self.picard().trajectory
                else:
                    self._solutions[method] = solve_marching(
                        self.parameter, self.family, self.history, self.solver.quadrature,
                    )
            return self._solutions[method]

    def resolved_constants(self) -> Dict[str, float]:
        """Şimdiye kadar hesaplanmış sabitler (manifest için)"""
        with self._lock:
            constants: Dict[str, float] = {}
            if self._K is not None:
                constants["K"] = self._K
            for (p, q), (M, gamma) in sorted(self._fits.items()):
                constants[f"M_p{p}_q{q}"] = M
                constants[f"gamma_p{p}_q{q}"] = gamma
            if self._picard is not None:
                constants["mu"] = self._picard.mu
                constants["picard_iterations"] = float(self._picard.iterations)
            return constants

    def build_family(
        self,
        parameter: Optional[ParameterPoint] = None,
        scheme: Optional[Scheme] = None,
        time_grid: Optional[TimeGrid] = None,
        adjoint_mode: Optional[AdjointMode] = None,
    ) -> IEvolutionFamily:
        """
        Bağlamın ailesinin bir varyantı (farklı parametre, şema, ızgara veya adjoint modu).

        Raises:
            ConfigurationError: builder tanımlı değil
        """
        if self.builder is None:
            raise ConfigurationError("Evolüsyon ailesi kurucusu tanımlı değil")
        return self.builder(
            parameter if parameter is not None else self.parameter,
            scheme=scheme,
            time_grid=time_grid,
            adjoint_mode=adjoint_mode,
        )

    def build_history(self, dt: float) -> HistorySegment:
        """
        Verilen adımla yeniden örneklenmiş başlangıç verisi.
        Kurucu yoksa yalnızca sabit kuyruklu geçmiş yeniden örneklenebilir.

        Raises:
            ConfigurationError: Geçmiş yeniden örneklenemiyor
        """
        if self.history_builder is not None:
            return self.history_builder(dt)
        h = self.history
        if h.tail.size and float(abs(h.tail - h.head.values).max()) == 0.0:
            return HistorySegment.constant(h.head, dt, h.r)
        raise ConfigurationError("Sabit olmayan geçmiş için yeniden örnekleme kurucusu gerekli")
