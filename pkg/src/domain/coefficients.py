"""
Domain Coefficients
Parametre uzayı Y'nin bir noktası: katsayı alanları, sınırlar (α₀, K),
matris örnekleri ve ‖·‖_{ξ,η} matris normları.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field, replace
from typing import FrozenSet, Mapping, Optional, Sequence, Tuple

import numpy as np

from .entities import SpatialGrid
from .exceptions import GridMismatchError, ValidationError
from .norms import rescaled_lp
from .value_objects import BoundaryKind, Exponent


class CoeffExpr(ABC):
    """
    Kapalı formda katsayı ifadesi.
    (t, x1, x2) üzerinde vektörize değerlendirilir.
    """

    @property
    @abstractmethod
    def source(self) -> str:
        """İfadenin kanonik metin hali"""
        pass

    @abstractmethod
    def evaluate(self, t: float, coords: Mapping[str, np.ndarray]) -> np.ndarray:
        """Verilen zaman ve düğüm koordinatlarında değerlendir (yayınlanabilir dizi)"""
        pass

    @abstractmethod
    def free_variables(self) -> FrozenSet[str]:
        """İfadede geçen değişken adları"""
        pass

    @property
    def is_time_dependent(self) -> bool:
        return "t" in self.free_variables()

    def sample(self, t: float, grid: SpatialGrid) -> np.ndarray:
        """Izgara şeklinde, sonlu değerler"""
        values = np.broadcast_to(
            np.asarray(self.evaluate(t, grid.coordinates), dtype=float), grid.shape
        )
        if not np.all(np.isfinite(values)):
            raise ValidationError(f"İfade sonlu olmayan değer üretti: {self.source}", f"t={t}")
        return values

    def __str__(self) -> str:
        return self.source


ExprMatrix = Tuple[Tuple[CoeffExpr, ...], ...]


def _as_matrix(rows: Sequence[Sequence[CoeffExpr]]) -> ExprMatrix:
    return tuple(tuple(row) for row in rows)


@dataclass(frozen=True)
class ComponentCoefficients:
    """
    Tek bir k bileşeninin yüksek mertebeden katsayıları a₀^k:
    a^k_{ij}, a^k_i, b^k_i, d₀^k ve sınır koşulu türü.
    """

    bc: BoundaryKind
    a: ExprMatrix
    a_first: Tuple[CoeffExpr, ...]
    b_first: Tuple[CoeffExpr, ...]
    d0: CoeffExpr

    def __post_init__(self):
        object.__setattr__(self, "a", _as_matrix(self.a))
        object.__setattr__(self, "a_first", tuple(self.a_first))
        object.__setattr__(self, "b_first", tuple(self.b_first))
        object.__setattr__(self, "bc", BoundaryKind.parse(self.bc))
        dim = len(self.a)
        if dim not in (1, 2) or any(len(row) != dim for row in self.a):
            raise ValidationError(f"a^k_ij kare N×N matris olmalıdır (N ∈ {{1,2}}), alınan satır sayısı: {dim}")
        if len(self.a_first) != dim or len(self.b_first) != dim:
            raise ValidationError("a^k_i ve b^k_i N uzunluğunda olmalıdır")

    @property
    def dim(self) -> int:
        return len(self.a)

    @property
    def is_time_dependent(self) -> bool:
        exprs = [e for row in self.a for e in row] + list(self.a_first) + list(self.b_first) + [self.d0]
        return any(e.is_time_dependent for e in exprs)

    def adjoint(self) -> "ComponentCoefficients":
        """Adjoint katsayılar a₀* = (a_ji, -b_i, -a_i, d₀)"""
        neg_b = [_Negated(e) for e in self.b_first]
        neg_a = [_Negated(e) for e in self.a_first]
        transposed = tuple(tuple(self.a[j][i] for j in range(self.dim)) for i in range(self.dim))
        return ComponentCoefficients(bc=self.bc, a=transposed, a_first=neg_b, b_first=neg_a, d0=self.d0)


class _Negated(CoeffExpr):
    """-e (adjoint katsayılar için)"""

    def __init__(self, inner: CoeffExpr):
        self._inner = inner

    @property
    def source(self) -> str:
        return f"-({self._inner.source})"

    def evaluate(self, t, coords):
        return -np.asarray(self._inner.evaluate(t, coords), dtype=float)

    def free_variables(self):
        return self._inner.free_variables()


@dataclass(frozen=True)
class ParameterPoint:
    """
    Y'nin bir elemanı a: tüm katsayı alanları ve bildirilen sınırlar α₀, K.
    Bileşenler kendi sınır koşulu türünü taşır.
    """

    components: Tuple[ComponentCoefficients, ...]
    c0: ExprMatrix
    c1: ExprMatrix
    alpha0: float
    K_bound: float

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "c0", _as_matrix(self.c0))
        object.__setattr__(self, "c1", _as_matrix(self.c1))
        n = len(self.components)
        if n < 1:
            raise ValidationError("En az bir bileşen gerekli")
        for name, matrix in (("c0", self.c0), ("c1", self.c1)):
            if len(matrix) != n or any(len(row) != n for row in matrix):
                raise ValidationError(f"{name} n×n matris olmalıdır (n={n})")
        if len({c.dim for c in self.components}) != 1:
            raise ValidationError("Tüm bileşenler aynı uzay boyutunda olmalıdır")
        if not self.alpha0 > 0:
            raise ValidationError(f"α₀ pozitif olmalıdır, alınan: {self.alpha0}")
        if not self.K_bound > 0:
            raise ValidationError(f"K pozitif olmalıdır, alınan: {self.K_bound}")

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def N(self) -> int:
        return self.components[0].dim

    def coupling(self, i: int) -> ExprMatrix:
        """c₀ (i=0) veya c₁ (i=1)"""
        if i not in (0, 1):
            raise ValidationError(f"Çarpım operatörü indeksi 0 veya 1 olmalıdır, alınan: {i}")
        return self.c0 if i == 0 else self.c1

    def coupling_is_time_dependent(self, i: int) -> bool:
        return any(e.is_time_dependent for row in self.coupling(i) for e in row)

    def coupling_fields(self, i: int, t: float, grid: SpatialGrid) -> np.ndarray:
        """c_i(t, ·) düğüm değerleri, şekil (n, n, *hücreler)"""
        if grid.dim != self.N:
            raise GridMismatchError(f"Izgara boyutu {grid.dim}, parametre boyutu {self.N}")
        matrix = self.coupling(i)
        return np.stack([np.stack([e.sample(t, grid) for e in row]) for row in matrix])

    def with_coupling(self, c0: Optional[ExprMatrix] = None, c1: Optional[ExprMatrix] = None) -> "ParameterPoint":
        """Yalnızca sıfırıncı mertebe/gecikme katsayıları değiştirilmiş kopya"""
        return replace(
            self,
            c0=self.c0 if c0 is None else _as_matrix(c0),
            c1=self.c1 if c1 is None else _as_matrix(c1),
        )

    def without_coupling(self, zero: CoeffExpr) -> "ParameterPoint":
        matrix = tuple(tuple(zero for _ in range(self.n)) for _ in range(self.n))
        return self.with_coupling(c0=matrix, c1=matrix)


@dataclass(frozen=True, eq=False)
class MatrixSample:
    """
    c_i(t, x) matrisinin bir t anındaki örneği.
    entries[k][l] genellikle ‖c^{kl}(t,·)‖_{L_∞(D)} değeridir.
    """

    entries: np.ndarray = field(default_factory=lambda: np.zeros((1, 1)))

    def __post_init__(self):
        entries = np.array(self.entries, dtype=float, copy=True)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValidationError(f"Kare matris bekleniyor, alınan şekil: {entries.shape}")
        if not np.all(np.isfinite(entries)):
            raise ValidationError("Matris girdileri sonlu olmalıdır")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_fields(cls, fields: np.ndarray) -> "MatrixSample":
        """(n, n, *hücreler) alanlarından girdi başına sup-normları"""
        n = fields.shape[0]
        return cls(np.max(np.abs(fields.reshape(n, n, -1)), axis=2))

    @property
    def n(self) -> int:
        return self.entries.shape[0]


def matrix_norm(g: MatrixSample, xi, eta) -> float:
    """
    ‖g‖_{ξ,η}: iç ξ-normu l üzerinden, dış η-normu k üzerinden.
    Girdiler ‖g^{kl}‖_{L_∞(D)} olarak yorumlanır.
    """
    try:
        xi_exp, eta_exp = Exponent.parse(xi), Exponent.parse(eta)
    except ValueError as e:
        raise ValidationError(str(e)) from e

    magnitudes = np.abs(g.entries)
    if xi_exp.is_infinite:
        rows = np.max(magnitudes, axis=1)
    else:
        rows = rescaled_lp(magnitudes, xi_exp.value, axis=1)

    if eta_exp.is_infinite:
        return float(np.max(rows))
    return float(rescaled_lp(rows, eta_exp.value))


@dataclass(frozen=True, eq=False)
class SampleBox:
    """
    Katsayıların örneklendiği uzay-zaman kutusu: ızgara düğümleri × zaman düğümleri.
    Sınırlılık, elliptiklik ve K kontrolleri bu kutu üzerinde yapılır.
    """

    grid: SpatialGrid
    times: np.ndarray

    def __post_init__(self):
        times = np.array(self.times, dtype=float, copy=True).ravel()
        if times.size == 0:
            raise ValidationError("Örnekleme kutusunda zaman noktası yok")
        times.setflags(write=False)
        object.__setattr__(self, "times", times)

    def sample(self, expr: CoeffExpr) -> np.ndarray:
        """İfadenin tüm kutu üzerindeki değerleri, şekil (zaman, *hücreler)"""
        if not expr.is_time_dependent:
            return expr.sample(float(self.times[0]), self.grid)[np.newaxis]
        return np.stack([expr.sample(float(t), self.grid) for t in self.times])

    def sup(self, expr: CoeffExpr) -> float:
        return float(np.max(np.abs(self.sample(expr))))
