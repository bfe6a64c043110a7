"""
Application DTOs - Raporlar
Sınır raporları, çizelge raporu, yakınsama çalışması ve kontrol kayıtları.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ...domain.value_objects import Provenance


# Karşılaştırmalarda yuvarlama payı (göreli)
PASS_TOLERANCE = 1e-12


@dataclass(frozen=True)
class EstimateReport:
    """
    Teorik sınır ile ölçülen değerin karşılaştırması.
    margin negatif olabilir; başarısız sınır bir bulgudur, hata değil.
    """
    bound_name: str
    theoretical: float
    measured: float
    inputs: Dict[str, object] = field(default_factory=dict)

    @property
    def margin(self) -> float:
        return self.theoretical - self.measured

    @property
    def passed(self) -> bool:
        return self.measured <= self.theoretical * (1.0 + PASS_TOLERANCE)


@dataclass(frozen=True)
class ScheduleReport:
    """Düzenlileştirme çizelgesi: m₀ adımlı p-zinciri ve bekleme süresi Θ"""
    N: int
    p: float
    q: float
    r0: float
    r_conjugate: float
    m0: int
    Theta: int
    chain: Tuple[float, ...]
    valid: bool

    def rows(self) -> List[Tuple[str, str]]:
        """Yazdırma için (ad, değer) çiftleri"""
        chain = " < ".join("inf" if p == float("inf") else f"{p:g}" for p in self.chain)
        return [
            ("N", str(self.N)),
            ("p", f"{self.p:g}"),
            ("q", "inf" if self.q == float("inf") else f"{self.q:g}"),
            ("r0", "inf" if self.r0 == float("inf") else f"{self.r0:g}"),
            ("r'", "inf" if self.r_conjugate == float("inf") else f"{self.r_conjugate:g}"),
            ("m0", str(self.m0)),
            ("Theta", str(self.Theta)),
            ("chain", chain),
            ("valid", str(self.valid).lower()),
        ]


@dataclass(frozen=True)
class ConvergenceStudy:
    """Weak-* çalışması: m başına pencere hatası ve eğilim kararı"""
    ms: Tuple[int, ...]
    errors: Tuple[float, ...]
    window: Tuple[float, float]
    q: str
    passed: bool
    variant: str = "windowed"
    mode: str = "time"
    amp: float = 0.0

    def rows(self) -> List[Tuple[int, float]]:
        return list(zip(self.ms, self.errors))


@dataclass(frozen=True)
class CheckRecord:
    """
    Tek bir doğrulama kontrolü.
    theoretical tolerans veya sınır, measured ölçülen artık/değerdir.
    """
    suite: str
    check: str
    theoretical: float
    measured: float
    passed: bool
    provenance: Provenance = Provenance.MEASURED

    @property
    def margin(self) -> float:
        return self.theoretical - self.measured

    @classmethod
    def at_most(cls, suite: str, check: str, measured: float, bound: float, **kwargs) -> "CheckRecord":
        """measured ≤ bound kontrolü"""
        return cls(suite, check, float(bound), float(measured), bool(measured <= bound), **kwargs)

    @classmethod
    def from_estimate(cls, suite: str, report: EstimateReport) -> "CheckRecord":
        return cls(
            suite,
            report.bound_name,
            report.theoretical,
            report.measured,
            report.passed,
            Provenance.THEORETICAL,
        )


@dataclass
class CommandResult:
    """Use case sonucu: çıkış kodu, yazılan dosyalar ve özet satırları"""
    exit_code: int = 0
    outputs: List[str] = field(default_factory=list)
    summary: List[str] = field(default_factory=list)
    checks: List[CheckRecord] = field(default_factory=list)
    manifest: Optional[Dict[str, object]] = None

    @property
    def success(self) -> bool:
        return self.exit_code == 0


@dataclass(frozen=True)
class RunManifest:
    """Yeniden üretilebilirlik kaydı: yapılandırma özeti, çözülmüş sabitler, kontroller"""
    command: str
    config_hash: str
    tool_version: str
    wall_time: float
    constants: Dict[str, float] = field(default_factory=dict)
    checks: Tuple[CheckRecord, ...] = ()
    outputs: Tuple[str, ...] = ()

    def to_dict(self) -> Dict[str, object]:
        return {
            "command": self.command,
            "config_hash": self.config_hash,
            "tool_version": self.tool_version,
            "wall_time": self.wall_time,
            "constants": dict(self.constants),
            "checks": [
                {"suite": c.suite, "check": c.check, "passed": c.passed, "provenance": c.provenance.value}
                for c in self.checks
            ],
            "outputs": list(self.outputs),
        }
