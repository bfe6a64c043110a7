"""
Dependency Injection Container
ContainerBuilder pattern ile DI yönetimi; RunConfig'ten RunContext kurar.
"""

from typing import Callable, Optional, Sequence
import logging

import numpy as np

from .application import LoggingProgressNotifier, RunContext
from .application.dtos import InitialSpec, RunConfig
from .application.services import validate_parameter
from .application.use_cases import BaseUseCase
from .core import (
    Result,
    SuiteRegistry,
    UseCaseRegistry,
    get_suite_registry,
    get_use_case_registry,
    try_result,
)
from .domain import (
    AdjointMode,
    ComponentCoefficients,
    ConfigurationError,
    GridFunction,
    HistorySegment,
    IConfigProvider,
    IProgressNotifier,
    IResultWriter,
    ParameterPoint,
    SampleBox,
    Scheme,
    SpatialGrid,
    TimeGrid,
    ValidationError,
)
from .infrastructure.config import ConfigService, RunConfigLoader
from .infrastructure.expressions import parse_expr
from .infrastructure.io import ResultWriter
from .infrastructure.numerics import EvolutionFamily

logger = logging.getLogger(__name__)


# Bu adım sayısına kadar kutu her zaman düğümünü içerir; üstünde eşit aralıklı alt örnek
_BOX_MAX_STEPS = 10_000


def build_parameter(config: RunConfig) -> ParameterPoint:
    """Metin ifadelerden ParameterPoint"""
    system = config.system

    def matrix(rows: Sequence[Sequence[str]]):
        return tuple(tuple(parse_expr(e) for e in row) for row in rows)

    components = [
        ComponentCoefficients(
            bc=spec.bc,
            a=matrix(spec.a),
            a_first=tuple(parse_expr(e) for e in spec.a_first),
            b_first=tuple(parse_expr(e) for e in spec.b_first),
            d0=parse_expr(spec.d0),
        )
        for spec in system.components
    ]
    return ParameterPoint(
        components=tuple(components),
        c0=matrix(system.c0),
        c1=matrix(system.c1),
        alpha0=system.alpha0,
        K_bound=system.K_bound,
    )


def build_history(spec: InitialSpec, grid: SpatialGrid, dt: float) -> HistorySegment:
    """
    head ifadeleri t = 0'da örneklenir; tail ifadeleri τ_i = −1 + i·dt noktalarında.
    tail verilmezse geçmiş head'e eşit sabittir.
    """
    head_exprs = [parse_expr(e) for e in spec.head]
    head = GridFunction(grid, np.stack([e.sample(0.0, grid) for e in head_exprs]))
    if spec.tail is None:
        return HistorySegment.constant(head, dt, spec.r)

    tail_exprs = [parse_expr(e) for e in spec.tail]
    m = int(round(1.0 / dt))
    tail = np.stack([
        np.stack([e.sample(-1.0 + i * dt, grid) for e in tail_exprs])
        for i in range(m)
    ])
    return HistorySegment(head=head, tail=tail, dt=dt, r=spec.r)


def sample_box(grid: SpatialGrid, time_grid: TimeGrid) -> SampleBox:
    """Izgara düğümleri × zaman düğümleri (çok uzun koşularda alt örneklenmiş)"""
    if time_grid.steps <= _BOX_MAX_STEPS:
        return SampleBox(grid=grid, times=time_grid.times)
    indices = np.unique(np.linspace(0, time_grid.steps, num=_BOX_MAX_STEPS + 1).round()).astype(int)
    logger.warning(f"Örnekleme kutusu {time_grid.steps + 1} zaman düğümünden {indices.size} tanesini kullanıyor")
    return SampleBox(grid=grid, times=time_grid.times[indices])


class ContainerBuilder:
    """
    Container Builder.

    Fluent interface ile container konfigürasyonu:

        container = (ContainerBuilder()
            .with_config(ConfigService())
            .with_writer(ResultWriter())
            .build())
    """

    def __init__(self):
        self._config: Optional[IConfigProvider] = None
        self._writer: Optional[IResultWriter] = None
        self._notifier: Optional[IProgressNotifier] = None
        self._loader: Optional[RunConfigLoader] = None

    def with_config(self, config: IConfigProvider) -> "ContainerBuilder":
        """Konfigürasyon sağlayıcısı belirle"""
        self._config = config
        return self

    def with_writer(self, writer: IResultWriter) -> "ContainerBuilder":
        """Çıktı yazıcısı belirle"""
        self._writer = writer
        return self

    def with_notifier(self, notifier: IProgressNotifier) -> "ContainerBuilder":
        """İlerleme bildiricisi belirle"""
        self._notifier = notifier
        return self

    def with_loader(self, loader: RunConfigLoader) -> "ContainerBuilder":
        """RunConfig yükleyicisi belirle"""
        self._loader = loader
        return self

    def build(self) -> "Container":
        """Container oluştur"""
        return Container(
            config=self._config,
            writer=self._writer,
            notifier=self._notifier,
            loader=self._loader,
        )


class Container:
    """
    Dependency Injection Container.
    Yapılandırma, yazıcı, bildirici ve registry'leri bir arada tutar.
    """

    _instance: Optional["Container"] = None

    def __init__(
        self,
        config: Optional[IConfigProvider] = None,
        writer: Optional[IResultWriter] = None,
        notifier: Optional[IProgressNotifier] = None,
        loader: Optional[RunConfigLoader] = None,
    ):
        logger.debug("DI Container başlatılıyor...")
        self.config = config or ConfigService()
        self.writer = writer or ResultWriter()
        self.notifier = notifier or LoggingProgressNotifier()
        self.loader = loader or RunConfigLoader()

        self._use_case_registry = get_use_case_registry()
        self._use_case_registry.ensure_discovered()
        self._suite_registry = get_suite_registry()
        self._suite_registry.ensure_discovered()
        logger.debug(
            f"DI Container hazır: use case'ler={self._use_case_registry.list_plugins()}, "
            f"paketler={self._suite_registry.list_plugins()}"
        )

    def family_builder(self, config: RunConfig, grid: SpatialGrid, default_grid: TimeGrid) -> Callable:
        """RunContext.builder: yapılandırmanın şema/adjoint varsayılanlarıyla aile kurucusu"""
        solver = config.solver

        def build(parameter: ParameterPoint, scheme=None, time_grid=None, adjoint_mode=None):
            return EvolutionFamily.for_parameter(
                parameter,
                grid,
                time_grid if time_grid is not None else default_grid,
                Scheme.parse(scheme) if scheme is not None else solver.scheme,
                AdjointMode.parse(adjoint_mode) if adjoint_mode is not None else solver.adjoint_mode,
            )
        return build

    def build_context(self, config: RunConfig) -> RunContext:
        """
        RunConfig → RunContext. Tüm varsayımlar hesaplamadan önce doğrulanır.

        Raises:
            AssumptionViolation: DA1–DA5 ihlali
            ValidationError: Izgara, ifade veya başlangıç verisi hatası
        """
        grid = SpatialGrid(config.domain.extents, config.domain.cells)
        time_grid = TimeGrid(0.0, config.time.T, config.time.dt)
        parameter = build_parameter(config)
        if parameter.N != grid.dim:
            raise ValidationError(f"Katsayı boyutu {parameter.N}, ızgara boyutu {grid.dim}")
        box = sample_box(grid, time_grid)
        validate_parameter(parameter, grid, box)

        history = build_history(config.initial, grid, time_grid.dt)
        if history.n != parameter.n:
            raise ValidationError(f"Başlangıç verisi {history.n} bileşenli, sistem n={parameter.n}")

        builder = self.family_builder(config, grid, time_grid)
        context = RunContext(
            parameter=parameter,
            family=builder(parameter),
            history=history,
            box=box,
            solver=config.solver,
            output=config.output,
            study=config.study,
            notifier=self.notifier,
            threads=self.config.threads,
            builder=builder,
            history_builder=lambda dt: build_history(config.initial, grid, dt),
            config_hash=config.config_hash,
        )
        logger.info(
            f"Bağlam kuruldu: n={parameter.n}, N={grid.dim}, hücre={grid.cells}, "
            f"T={time_grid.T:g}, dt={time_grid.dt:g}, şema={config.solver.scheme.value}"
        )
        return context

    @try_result(ValidationError, ConfigurationError)
    def _context_from_config(self, config: RunConfig) -> RunContext:
        return self.build_context(config)

    def load_context(self, path: str) -> Result:
        """Yapılandırma dosyasından RunContext; hatalar Result.fail olarak döner"""
        return self.loader.load(path).flat_map(self._context_from_config)

    def get_use_case(self, name: str) -> BaseUseCase:
        """
        Raises:
            KeyError: Bilinmeyen alt komut
        """
        return self._use_case_registry.get(
            name,
            context_loader=self.load_context,
            writer=self.writer,
            config=self.config,
        )

    @property
    def use_case_registry(self) -> UseCaseRegistry:
        """Use case registry'e erişim"""
        return self._use_case_registry

    @property
    def suite_registry(self) -> SuiteRegistry:
        """Doğrulama paketi registry'e erişim"""
        return self._suite_registry

    @classmethod
    def get_instance(cls) -> "Container":
        """Singleton instance döndür"""
        if cls._instance is None:
            cls._instance = ContainerBuilder().build()
        return cls._instance

    @classmethod
    def reset(cls):
        """Container'ı sıfırla (test için)"""
        cls._instance = None
        UseCaseRegistry.reset()
        SuiteRegistry.reset()


# Global container instance (lazy)
def get_container() -> Container:
    """Container instance al"""
    return Container.get_instance()
