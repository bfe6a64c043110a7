"""
Domain Entities
Laboratuvarın temel varlıkları: uzay/zaman ızgaraları, ızgara fonksiyonları,
başlangıç geçmişi ve yörünge.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Optional, Tuple
import math

import numpy as np

from .exceptions import AssumptionViolation, GridMismatchError, OffGridTimeError, ValidationError
from .value_objects import Exponent, Provenance


# Zaman ızgarası toleransı (adım cinsinden)
_TIME_TOLERANCE = 1e-6
_DIVISIBILITY_TOLERANCE = 1e-9


def _readonly(values: np.ndarray) -> np.ndarray:
    values.setflags(write=False)
    return values


@dataclass(frozen=True)
class SpatialGrid:
    """
    Hücre merkezli uzay ızgarası: D = (lo, hi) veya dikdörtgen, N ∈ {1, 2}.
    Düğümler hücre merkezleridir; Dirichlet değerleri bilinmeyen değil,
    hayalet (ghost) kısıtlardır.
    """

    extents: Tuple[Tuple[float, float], ...]
    cells: Tuple[int, ...]

    def __post_init__(self):
        extents = tuple((float(lo), float(hi)) for lo, hi in self.extents)
        cells = tuple(int(c) for c in self.cells)
        object.__setattr__(self, "extents", extents)
        object.__setattr__(self, "cells", cells)

        if len(extents) not in (1, 2):
            raise ValidationError(f"Uzay boyutu 1 veya 2 olmalıdır, alınan: {len(extents)}")
        if len(cells) != len(extents):
            raise ValidationError("extents ve cells aynı uzunlukta olmalıdır")
        for lo, hi in extents:
            if not (math.isfinite(lo) and math.isfinite(hi)) or hi <= lo:
                raise AssumptionViolation("DA1", f"D sınırlı bir bölge olmalıdır, alınan aralık: ({lo}, {hi})")
        for c in cells:
            if c < 2:
                raise ValidationError(f"Her eksende en az 2 hücre gerekli, alınan: {c}")

    @property
    def dim(self) -> int:
        return len(self.extents)

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.cells

    @property
    def size(self) -> int:
        return int(np.prod(self.cells))

    @property
    def spacing(self) -> Tuple[float, ...]:
        return tuple((hi - lo) / c for (lo, hi), c in zip(self.extents, self.cells))

    @property
    def cell_volume(self) -> float:
        return float(np.prod(self.spacing))

    @property
    def measure(self) -> float:
        """|D| - kenar uzunluklarının çarpımı"""
        return float(np.prod([hi - lo for lo, hi in self.extents]))

    @property
    def faces(self) -> Tuple[str, ...]:
        """Sınır yüzü etiketleri: x1_lo, x1_hi (, x2_lo, x2_hi)"""
        return tuple(f"x{axis + 1}_{side}" for axis in range(self.dim) for side in ("lo", "hi"))

    def axis_centers(self, axis: int) -> np.ndarray:
        lo, _ = self.extents[axis]
        h = self.spacing[axis]
        return lo + (np.arange(self.cells[axis]) + 0.5) * h

    @cached_property
    def coordinates(self) -> Dict[str, np.ndarray]:
        """Hücre merkezleri, ifade değişken adlarıyla (x1, x2)"""
        axes = [self.axis_centers(i) for i in range(self.dim)]
        mesh = np.meshgrid(*axes, indexing="ij")
        return {f"x{i + 1}": _readonly(np.ascontiguousarray(m)) for i, m in enumerate(mesh)}

    def boundary_mask(self, face: str) -> np.ndarray:
        """Verilen yüze komşu hücreler için boolean maske"""
        if face not in self.faces:
            raise ValidationError(f"Bilinmeyen sınır yüzü: {face}")
        axis = int(face[1]) - 1
        mask = np.zeros(self.cells, dtype=bool)
        index = [slice(None)] * self.dim
        index[axis] = 0 if face.endswith("lo") else -1
        mask[tuple(index)] = True
        return mask


@dataclass(frozen=True)
class TimeGrid:
    """
    Düzgün zaman ızgarası [t0, T].
    dt gecikmeyi (1) tam böler; böylece ζ - 1 her zaman bir düğüme düşer.
    """

    t0: float
    T: float
    dt: float

    def __post_init__(self):
        t0, T, dt = float(self.t0), float(self.T), float(self.dt)
        object.__setattr__(self, "t0", t0)
        object.__setattr__(self, "T", T)
        object.__setattr__(self, "dt", dt)

        if not dt > 0:
            raise ValidationError(f"dt pozitif olmalıdır, alınan: {dt}")
        if not T > t0:
            raise ValidationError(f"T > t0 olmalıdır, alınan: t0={t0}, T={T}")

        per_delay = 1.0 / dt
        if abs(per_delay - round(per_delay)) > _DIVISIBILITY_TOLERANCE * max(1.0, per_delay):
            raise ValidationError(f"dt gecikmeyi (1) tam bölmelidir, alınan dt={dt}")

        steps = (T - t0) / dt
        if abs(steps - round(steps)) > _DIVISIBILITY_TOLERANCE * max(1.0, steps):
            raise ValidationError(f"(T - t0) / dt tam sayı olmalıdır, alınan: {steps}")

    @property
    def steps(self) -> int:
        return int(round((self.T - self.t0) / self.dt))

    @property
    def steps_per_delay(self) -> int:
        return int(round(1.0 / self.dt))

    @property
    def times(self) -> np.ndarray:
        return self.t0 + np.arange(self.steps + 1) * self.dt

    def time_at(self, index: int) -> float:
        if not 0 <= index <= self.steps:
            raise OffGridTimeError(f"İndeks aralık dışında: {index}")
        return self.t0 + index * self.dt

    def contains(self, t: float) -> bool:
        try:
            self.index_of(t)
            return True
        except OffGridTimeError:
            return False

    def index_of(self, t: float) -> int:
        """t'nin düğüm indeksi; ızgara dışı zamanlar reddedilir"""
        position = (float(t) - self.t0) / self.dt
        index = int(round(position))
        if abs(position - index) > _TIME_TOLERANCE or not 0 <= index <= self.steps:
            raise OffGridTimeError(f"t={t} zaman ızgarasında değil", f"[{self.t0}, {self.T}], dt={self.dt}")
        return index

    def window_indices(self, t_start: float, t_end: float) -> np.ndarray:
        """[t_start, t_end] içindeki düğüm indeksleri"""
        tol = _TIME_TOLERANCE * self.dt
        times = self.times
        mask = (times >= t_start - tol) & (times <= t_end + tol)
        return np.nonzero(mask)[0]

    def with_span(self, t0: float, T: float) -> "TimeGrid":
        return TimeGrid(t0=t0, T=T, dt=self.dt)


@dataclass(frozen=True, eq=False)
class GridFunction:
    """
    Ayrık L_p(D)^n elemanı: n bileşenli, her düğümde bir değer.
    Oluşturulduktan sonra değiştirilemez.
    """

    grid: SpatialGrid
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float, copy=True)
        if values.ndim == self.grid.dim:
            values = values[np.newaxis]
        if values.ndim != self.grid.dim + 1 or values.shape[1:] != self.grid.shape:
            raise GridMismatchError(
                f"Değer dizisi ızgara ile uyumsuz: {values.shape}, beklenen (n, {self.grid.shape})"
            )
        if not np.all(np.isfinite(values)):
            raise ValidationError("GridFunction değerleri sonlu olmalıdır")
        object.__setattr__(self, "values", _readonly(values))

    @classmethod
    def zeros(cls, grid: SpatialGrid, n: int) -> "GridFunction":
        return cls(grid, np.zeros((n,) + grid.shape))

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def component(self, k: int) -> np.ndarray:
        return self.values[k]

    def check_compatible(self, other: "GridFunction") -> None:
        if self.grid != other.grid or self.n != other.n:
            raise GridMismatchError(
                "Fonksiyonlar aynı ızgarada ve aynı bileşen sayısında olmalıdır",
                f"n={self.n} vs n={other.n}",
            )

    def __add__(self, other: "GridFunction") -> "GridFunction":
        self.check_compatible(other)
        return GridFunction(self.grid, self.values + other.values)

    def __sub__(self, other: "GridFunction") -> "GridFunction":
        self.check_compatible(other)
        return GridFunction(self.grid, self.values - other.values)

    def __mul__(self, scalar: float) -> "GridFunction":
        return GridFunction(self.grid, float(scalar) * self.values)

    __rmul__ = __mul__

    def __neg__(self) -> "GridFunction":
        return GridFunction(self.grid, -self.values)

    def __repr__(self) -> str:
        return f"GridFunction(n={self.n}, shape={self.grid.shape})"


@dataclass(frozen=True, eq=False)
class HistorySegment:
    """
    Başlangıç verisi u₀ = (u₀⁽¹⁾, u₀⁽²⁾).
    head = u₀⁽¹⁾; tail[i], τ_i = -1 + i·dt (i = 0..m-1) noktasındaki örnektir
    (sol uç nokta örneklemesi, sıçramalar soldan örneklenir).
    """

    head: GridFunction
    tail: np.ndarray
    dt: float
    r: Exponent = field(default_factory=lambda: Exponent(math.inf))

    def __post_init__(self):
        tail = np.array(self.tail, dtype=float, copy=True)
        m = int(round(1.0 / self.dt))
        expected = (m, self.head.n) + self.head.grid.shape
        if tail.shape != expected:
            raise GridMismatchError(f"Geçmiş örnekleri uyumsuz: {tail.shape}, beklenen {expected}")
        if m < 1:
            raise ValidationError("Geçmiş boş olamaz")
        if not np.all(np.isfinite(tail)):
            raise ValidationError("Geçmiş değerleri sonlu olmalıdır")
        object.__setattr__(self, "tail", _readonly(tail))
        object.__setattr__(self, "r", Exponent.parse(self.r))

    @classmethod
    def constant(cls, head: GridFunction, dt: float, r="inf") -> "HistorySegment":
        """Geçmişi (-1, 0) üzerinde head'e eşit olan başlangıç verisi"""
        m = int(round(1.0 / dt))
        tail = np.broadcast_to(head.values, (m,) + head.values.shape)
        return cls(head=head, tail=tail, dt=dt, r=r)

    @property
    def grid(self) -> SpatialGrid:
        return self.head.grid

    @property
    def n(self) -> int:
        return self.head.n

    @property
    def steps_per_delay(self) -> int:
        return self.tail.shape[0]

    @property
    def tail_times(self) -> np.ndarray:
        return -1.0 + np.arange(self.steps_per_delay) * self.dt

    def tail_at(self, index: int) -> GridFunction:
        return GridFunction(self.grid, self.tail[index])

    def scaled_sum(self, alpha: float, other: "HistorySegment", beta: float) -> "HistorySegment":
        """α·self + β·other (lineerlik kontrolleri için)"""
        self.head.check_compatible(other.head)
        return HistorySegment(
            head=GridFunction(self.grid, alpha * self.head.values + beta * other.head.values),
            tail=alpha * self.tail + beta * other.tail,
            dt=self.dt,
            r=self.r,
        )


@dataclass(frozen=True, eq=False)
class Trajectory:
    """
    Mild çözümü temsil eden zaman indeksli GridFunction ailesi.
    time_grid [s - 1, T] aralığını kapsar; [s - 1, s) üzerindeki durumlar
    başlatan HistorySegment'in kuyruğuna eşittir.
    """

    time_grid: TimeGrid
    grid: SpatialGrid
    states: np.ndarray
    provenance: Provenance = Provenance.MARCHING

    def __post_init__(self):
        states = np.array(self.states, dtype=float, copy=True)
        if states.ndim != self.grid.dim + 2 or states.shape[0] != self.time_grid.steps + 1:
            raise GridMismatchError(
                f"Durum dizisi zaman ızgarası ile uyumsuz: {states.shape[0]} vs {self.time_grid.steps + 1}"
            )
        if states.shape[2:] != self.grid.shape:
            raise GridMismatchError("Durum dizisi uzay ızgarası ile uyumsuz")
        object.__setattr__(self, "states", _readonly(states))

    @property
    def n(self) -> int:
        return self.states.shape[1]

    @property
    def start(self) -> float:
        """Başlangıç zamanı s (ızgara s - 1'den başlar)"""
        return self.time_grid.t0 + 1.0

    @property
    def times(self) -> np.ndarray:
        return self.time_grid.times

    def values_at(self, t: float) -> np.ndarray:
        return self.states[self.time_grid.index_of(t)]

    def at(self, t: float) -> GridFunction:
        return GridFunction(self.grid, self.values_at(t))

    def history_at(self, theta: float, r: Optional[Exponent] = None) -> HistorySegment:
        """R(u)[θ] = (u(θ), u(· + θ)↾(-1, 0))"""
        index = self.time_grid.index_of(theta)
        m = self.time_grid.steps_per_delay
        if index < m:
            raise OffGridTimeError(f"θ={theta} için geçmiş penceresi yörüngenin dışında")
        return HistorySegment(
            head=GridFunction(self.grid, self.states[index]),
            tail=self.states[index - m:index],
            dt=self.time_grid.dt,
            r=r if r is not None else Exponent(math.inf),
        )
