"""
Domain Interfaces
Dependency Inversion için abstract interface'ler
Infrastructure bu interface'leri implement eder.
"""

from abc import ABC, abstractmethod
from typing import Any, Iterable, Mapping, Optional, Sequence

import numpy as np

from .entities import GridFunction, SpatialGrid, TimeGrid
from .events import CheckCompletedEvent, MuAdjustedEvent, PicardSweepEvent, StudyMemberEvent
from .exceptions import GridMismatchError, ValidationError


class IEvolutionFamily(ABC):
    """
    Ayrık evolüsyon ailesi U(t, s): tek adım operatörlerinin çarpımı.
    Alt sınıflar yalnızca tek adım (ileri ve adjoint) uygulamalarını sağlar;
    propagate ve adjoint_propagate bu adımları bileşik hale getirir.
    """

    @property
    @abstractmethod
    def grid(self) -> SpatialGrid:
        pass

    @property
    @abstractmethod
    def time_grid(self) -> TimeGrid:
        pass

    @property
    @abstractmethod
    def n(self) -> int:
        pass

    @abstractmethod
    def explicit_part(self, index: int, values: np.ndarray) -> np.ndarray:
        """θ-adımının açık yarısı (I − (1−θ)·dt·A_index) u"""
        pass

    @abstractmethod
    def implicit_solve(self, index: int, rhs: np.ndarray) -> np.ndarray:
        """θ-adımının kapalı yarısı: (I + θ·dt·A_index) x = rhs"""
        pass

    @abstractmethod
    def step(self, index: int, values: np.ndarray) -> np.ndarray:
        """U(t_{index+1}, t_index) uygula; values şekli (n, *hücreler)"""
        pass

    @abstractmethod
    def adjoint_step(self, index: int, values: np.ndarray) -> np.ndarray:
        """U(t_{index+1}, t_index)* uygula"""
        pass

    def propagate_values(self, start: int, end: int, values: np.ndarray) -> np.ndarray:
        """İndeks aralığında ileri adımlar; start == end ise kopya döner"""
        result = np.array(values, dtype=float, copy=True)
        for index in range(start, end):
            result = self.step(index, result)
        return result

    def adjoint_propagate_values(self, start: int, end: int, values: np.ndarray) -> np.ndarray:
        """U(t_end, t_start)* = adjoint adımların ters sırada çarpımı"""
        result = np.array(values, dtype=float, copy=True)
        for index in range(end - 1, start - 1, -1):
            result = self.adjoint_step(index, result)
        return result

    def _indices(self, s: float, t: float):
        if t < s:
            raise ValidationError(f"s ≤ t olmalıdır, alınan: s={s}, t={t}")
        return self.time_grid.index_of(s), self.time_grid.index_of(t)

    def _check_operand(self, u: GridFunction) -> None:
        if u.grid != self.grid or u.n != self.n:
            raise GridMismatchError("Fonksiyon evolüsyon ailesinin ızgarasında değil")

    def propagate(self, s: float, t: float, u: GridFunction) -> GridFunction:
        """U(t, s)u"""
        self._check_operand(u)
        start, end = self._indices(s, t)
        return GridFunction(self.grid, self.propagate_values(start, end, u.values))

    def adjoint_propagate(self, s: float, t: float, v: GridFunction) -> GridFunction:
        """U*(s, t)v"""
        self._check_operand(v)
        start, end = self._indices(s, t)
        return GridFunction(self.grid, self.adjoint_propagate_values(start, end, v.values))


class IProgressNotifier(ABC):
    """İlerleme bildirimi için arayüz"""

    @abstractmethod
    def notify_sweep(self, event: PicardSweepEvent) -> None:
        """Picard süpürmesini bildir"""
        pass

    @abstractmethod
    def notify_mu_adjusted(self, event: MuAdjustedEvent) -> None:
        """μ değişikliğini bildir"""
        pass

    @abstractmethod
    def notify_member(self, event: StudyMemberEvent) -> None:
        """Çalışma üyesi ilerlemesini bildir"""
        pass

    @abstractmethod
    def notify_check(self, event: CheckCompletedEvent) -> None:
        """Kontrol sonucunu bildir"""
        pass


class IConfigProvider(ABC):
    """Yapılandırma sağlayıcı arayüzü"""

    @property
    @abstractmethod
    def threads(self) -> int:
        pass

    @property
    @abstractmethod
    def log_level(self) -> str:
        pass

    @property
    @abstractmethod
    def log_file(self) -> Optional[str]:
        pass

    @property
    @abstractmethod
    def output_dir(self) -> str:
        pass


class IResultWriter(ABC):
    """
    Çıktı yazıcı arayüzü.
    Tablolar CSV (başlık satırı, '.' ondalık ayırıcı, LF satır sonu) olarak yazılır.
    """

    @abstractmethod
    def write_table(self, path: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        """Tabloyu yaz, yazılan dosya yolunu döndür"""
        pass

    @abstractmethod
    def write_manifest(self, path: str, manifest: Mapping[str, Any]) -> str:
        """Manifest sözlüğünü JSON olarak yaz"""
        pass

    @abstractmethod
    def write_arrays(self, path: str, arrays: Mapping[str, np.ndarray]) -> str:
        """Düğüm dizilerini sıkıştırılmış arşive yaz"""
        pass
