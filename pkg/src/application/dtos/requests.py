"""
Application DTOs - İstekler
Çalıştırma yapılandırması (RunConfig) ve çözücü ayarları.
Değerler RunConfigLoader tarafından varsayılanlarla doldurulur.
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple

from ...domain.value_objects import AdjointMode, Quadrature, Scheme


@dataclass(frozen=True)
class DomainSpec:
    """Bölge: eksen başına [lo, hi] ve hücre sayısı"""
    extents: Tuple[Tuple[float, float], ...]
    cells: Tuple[int, ...]


@dataclass(frozen=True)
class TimeSpec:
    """Ufuk T ve adım dt (başlangıç zamanı 0)"""
    T: float
    dt: float


@dataclass(frozen=True)
class ComponentSpec:
    """Bir bileşenin sınır koşulu ve katsayı ifadeleri (metin)"""
    bc: str
    a: Tuple[Tuple[str, ...], ...]
    a_first: Tuple[str, ...]
    b_first: Tuple[str, ...]
    d0: str = "0"


@dataclass(frozen=True)
class SystemSpec:
    """Sistem: bileşenler, c₀/c₁ matrisleri ve bildirilen sınırlar"""
    n: int
    alpha0: float
    K_bound: float
    components: Tuple[ComponentSpec, ...]
    c0: Tuple[Tuple[str, ...], ...]
    c1: Tuple[Tuple[str, ...], ...]


@dataclass(frozen=True)
class InitialSpec:
    """
    Başlangıç verisi: head bileşen ifadeleri (x), tail ifadeleri (t = τ, x).
    tail None ise geçmiş head'e eşit sabit alınır.
    """
    head: Tuple[str, ...]
    tail: Optional[Tuple[str, ...]] = None
    r: str = "inf"


@dataclass(frozen=True)
class PicardConfig:
    """
    Picard iterasyonu ayarları.
    mu None ise 4n²KMe^{γT} ile otomatik seçilir.
    """
    mu: Optional[float] = None
    tol: float = 1e-10
    max_iters: int = 200
    quadrature: Quadrature = Quadrature.TRAPEZOID
    adaptive: bool = True
    p: str = "2"

    def __post_init__(self):
        object.__setattr__(self, "quadrature", Quadrature.parse(self.quadrature))
        if self.mu is not None and not self.mu > 0:
            raise ValueError(f"mu pozitif olmalıdır, alınan: {self.mu}")
        if not self.tol > 0:
            raise ValueError(f"tol pozitif olmalıdır, alınan: {self.tol}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters ≥ 1 olmalıdır, alınan: {self.max_iters}")


@dataclass(frozen=True)
class EstimateSettings:
    """(M, γ) uydurması için prob ayarları"""
    samples: int = 4
    seed: int = 0
    power_iterations: int = 20


@dataclass(frozen=True)
class SolverSettings:
    """Zaman şeması, kuadratür, yöntem ve adjoint modu"""
    scheme: Scheme = Scheme.CRANK_NICOLSON
    quadrature: Quadrature = Quadrature.TRAPEZOID
    method: str = "marching"
    adjoint_mode: AdjointMode = AdjointMode.TRANSPOSE
    p: str = "2"
    picard: PicardConfig = field(default_factory=PicardConfig)
    estimate: EstimateSettings = field(default_factory=EstimateSettings)


@dataclass(frozen=True)
class OutputSettings:
    """norms.csv sütunları (q listesi) ve isteğe bağlı düğüm anlık görüntüleri"""
    norms_q: Tuple[str, ...] = ("2",)
    snapshots: bool = False


@dataclass(frozen=True)
class StudySettings:
    """
    Weak-* sürekli bağımlılık çalışması.
    variant: windowed (T > 2, pencere [Θ+1+dt, T]) veya short (T ≤ 1).
    """
    ms: Tuple[int, ...] = (1, 2, 4, 8, 16, 32, 64)
    amp: float = 0.1
    mode: str = "time"
    targets: Tuple[str, ...] = ("c0", "c1")
    q: str = "2"
    variant: str = "windowed"
    window: Optional[Tuple[float, float]] = None
    r0: Optional[str] = None
    p: str = "2"
    slack: float = 1.5
    final_ratio: float = 0.2
    condition_policy: str = "warn"
    solver: str = "marching"


@dataclass(frozen=True)
class RunConfig:
    """Tek bir JSON belgesinden okunan tam çalıştırma yapılandırması"""
    domain: DomainSpec
    time: TimeSpec
    system: SystemSpec
    initial: InitialSpec
    solver: SolverSettings = field(default_factory=SolverSettings)
    output: OutputSettings = field(default_factory=OutputSettings)
    study: Optional[StudySettings] = None
    config_hash: str = ""
    source_path: Optional[str] = None


@dataclass(frozen=True)
class SolveRequest:
    """pdde solve"""
    config_path: str
    out_dir: Optional[str] = None


@dataclass(frozen=True)
class VerifyRequest:
    """pdde verify; out_dir verilmezse rapor PDDE_OUTPUT_DIR altına yazılır"""
    suite: str
    config_path: str
    out_dir: Optional[str] = None


@dataclass(frozen=True)
class ScheduleRequest:
    """pdde schedule"""
    N: int
    p: str = "1"
    q: str = "inf"
    r0: str = "inf"


@dataclass(frozen=True)
class StudyRequest:
    """pdde study"""
    config_path: str
    out_dir: Optional[str] = None
