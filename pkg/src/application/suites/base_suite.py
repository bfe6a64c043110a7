"""
Application - Base Verification Suite
Doğrulama paketleri için abstract base class.
Yeni paket = suites/ altında yeni dosya, mevcut koda dokunma yok.
"""

from abc import ABC, abstractmethod
from typing import List
import logging
import time

from ...core.registry import PluginMetadata
from ...domain import CheckCompletedEvent
from ..context import RunContext
from ..dtos import CheckRecord

logger = logging.getLogger(__name__)


class VerificationSuite(ABC):
    """
    Base Verification Suite.

    Her paket bir RunContext üzerinde bir dizi kontrol çalıştırır ve
    CheckRecord listesi döner. Başarısız kontrol bir bulgudur, hata değil.

    Yeni paket eklemek için:
    1. Bu sınıftan türet
    2. get_metadata() ve checks() implement et
    3. suites/ klasörüne koy (SuiteRegistry otomatik keşfeder)
    """

    def __init__(self, context: RunContext):
        self.context = context

    @classmethod
    @abstractmethod
    def get_metadata(cls) -> PluginMetadata:
        """Paket meta bilgisi; name CLI'daki --suite değeridir"""
        pass

    @classmethod
    def get_name(cls) -> str:
        return cls.get_metadata().name

    @abstractmethod
    def checks(self) -> List[CheckRecord]:
        """Kontrolleri çalıştır"""
        pass

    def run(self) -> List[CheckRecord]:
        """Kontrolleri çalıştır, her sonucu bildir ve özetle"""
        name = self.get_name()
        logger.info(f"Doğrulama paketi başlatılıyor: {name}")
        started = time.time()

        records = self.checks()
        for record in records:
            self.context.notifier.notify_check(CheckCompletedEvent(
                suite=record.suite,
                check=record.check,
                passed=record.passed,
                margin=record.margin,
            ))

        failed = sum(1 for r in records if not r.passed)
        logger.info(
            f"Paket {name} tamamlandı: {len(records) - failed}/{len(records)} geçti "
            f"({time.time() - started:.2f}s)"
        )
        return records

    def record(self, check: str, measured: float, bound: float, **kwargs) -> CheckRecord:
        """measured ≤ bound kontrolü, paket adıyla"""
        return CheckRecord.at_most(self.get_name(), check, measured, bound, **kwargs)

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} name='{self.get_name()}'>"
