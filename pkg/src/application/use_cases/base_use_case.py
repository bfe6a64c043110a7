"""
Application - Base Use Case
Tüm use case'lerin türetilmesi gereken abstract base class.
OCP: Yeni alt komut = BaseUseCase'den türet, get_metadata() implement et.
"""

from abc import ABC, abstractmethod
from typing import Callable, Generic, Optional, Sequence, TypeVar
import logging
import os
import time

import numpy as np

from ... import __version__
from ...core.result import Result
from ...core.use_case_registry import UseCaseMetadata
from ...domain import (
    ConfigurationError,
    IConfigProvider,
    IResultWriter,
    SolverError,
    ValidationError,
)
from ..context import RunContext
from ..dtos import CheckRecord, CommandResult, RunManifest

logger = logging.getLogger(__name__)

TRequest = TypeVar('TRequest')

# Çıkış kodu sözleşmesi
EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SOLVER = 3
EXIT_CHECK_FAILED = 4

ContextLoader = Callable[[str], Result]


class BaseUseCase(ABC, Generic[TRequest]):
    """
    Base Use Case - Abstract Base Class.

    Tüm use case'ler bu sınıftan türetilmeli ve:
    1. get_metadata() class metodunu implement etmeli
    2. execute() metodunu implement etmeli

    Registry tarafından otomatik keşfedilir. run() hataları çıkış kodlarına çevirir:
    doğrulama/yapılandırma → 2, çözücü → 3, başarısız kontrol → 4.

    Örnek:
        class SolveUseCase(BaseUseCase[SolveRequest]):
            @classmethod
            def get_metadata(cls) -> UseCaseMetadata:
                return UseCaseMetadata(name="solve")

            def execute(self, request: SolveRequest) -> CommandResult:
                ...
    """

    def __init__(
        self,
        context_loader: Optional[ContextLoader] = None,
        writer: Optional[IResultWriter] = None,
        config: Optional[IConfigProvider] = None,
    ):
        self.context_loader = context_loader
        self.writer = writer
        self.config = config

    @classmethod
    @abstractmethod
    def get_metadata(cls) -> UseCaseMetadata:
        """
        Use case metadata'sını döndür.
        Auto-discovery için zorunlu.
        """
        pass

    @abstractmethod
    def execute(self, request: TRequest) -> CommandResult:
        """
        Use case'i çalıştır.

        Raises:
            ValidationError / ConfigurationError: Geçersiz yapılandırma
            SolverError: Çözücü başarısız
        """
        pass

    def validate_request(self, request: TRequest) -> None:
        """
        İsteği doğrula. Alt sınıflar override edebilir.

        Raises:
            ValidationError: Doğrulama başarısız
        """
        pass

    def run(self, request: TRequest) -> CommandResult:
        """execute() çağrısını hata → çıkış kodu eşlemesiyle sar"""
        started = time.time()
        try:
            self.validate_request(request)
            result = self.execute(request)
        except (ValidationError, ConfigurationError, ValueError) as e:
            logger.error(f"{self.name}: yapılandırma hatası: {e}")
            return CommandResult(exit_code=EXIT_CONFIG, summary=[f"Hata: {e}"])
        except (SolverError, np.linalg.LinAlgError) as e:
            logger.error(f"{self.name}: çözücü hatası: {e}")
            return CommandResult(exit_code=EXIT_SOLVER, summary=[f"Çözücü hatası: {e}"])

        logger.info(f"{self.name} tamamlandı: çıkış kodu {result.exit_code} ({time.time() - started:.2f}s)")
        return result

    def load_context(self, config_path: str) -> RunContext:
        """
        Raises:
            ConfigurationError: Yükleyici tanımlı değil veya yapılandırma okunamadı
        """
        if self.context_loader is None:
            raise ConfigurationError(f"{self.name} için yapılandırma yükleyicisi tanımlı değil")
        return self.context_loader(config_path).unwrap()

    def require_writer(self) -> IResultWriter:
        if self.writer is None:
            raise ConfigurationError(f"{self.name} için çıktı yazıcısı tanımlı değil")
        return self.writer

    def output_dir(self, requested: Optional[str], tag: str) -> str:
        """--out ya da PDDE_OUTPUT_DIR/<komut>-<etiket>"""
        if requested:
            return requested
        base = self.config.output_dir if self.config else "runs"
        return os.path.join(base, f"{self.name}-{tag}")

    def write_manifest(
        self,
        out_dir: str,
        context: RunContext,
        started: float,
        checks: Sequence[CheckRecord] = (),
        outputs: Sequence[str] = (),
    ) -> str:
        """manifest.json: yapılandırma özeti, sabitler, sürüm, süre ve kontroller"""
        manifest = RunManifest(
            command=self.name,
            config_hash=context.config_hash,
            tool_version=__version__,
            wall_time=round(time.time() - started, 3),
            constants=context.resolved_constants(),
            checks=tuple(checks),
            outputs=tuple(os.path.basename(path) for path in outputs),
        )
        return self.require_writer().write_manifest(os.path.join(out_dir, "manifest.json"), manifest.to_dict())

    @property
    def name(self) -> str:
        """Use case adı"""
        return self.get_metadata().name

    def __repr__(self) -> str:
        meta = self.get_metadata()
        return f"<{self.__class__.__name__} name='{meta.name}' v{meta.version}>"
