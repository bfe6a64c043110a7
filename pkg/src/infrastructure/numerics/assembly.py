"""
Bilineer Form Montajı
B^k[t; u, v] için hücre merkezli sonlu fark/hacim montajı (scipy.sparse).

Rijitlik matrisi S, vᵀ S u ≈ B^k[t; u, v] olacak şekilde kurulur:
    S = V Σ_i [G_iᵀ diag(a_ii) G_i + G_iᵀ diag(a_i) Avg_i − Avg_iᵀ diag(b_i) G_i]
        + V (D₁ᵀ diag(a_12) D₂ + D₂ᵀ diag(a_21) D₁)         (N = 2)
        + sınır terimleri (Dirichlet hayalet düğümü / Robin d₀)
Yüz katsayıları komşu düğüm değerlerinin aritmetik ortalamasıdır.
"""

from dataclasses import dataclass
from typing import List, Sequence, Union
import logging

import numpy as np
import scipy.sparse as sp

from ...domain.coefficients import ComponentCoefficients
from ...domain.entities import GridFunction, SpatialGrid
from ...domain.exceptions import AssumptionViolation, GridMismatchError
from ...domain.value_objects import BoundaryKind

logger = logging.getLogger(__name__)


# Simetri karşılaştırması için mutlak tolerans
_SYMMETRY_TOLERANCE = 1e-12


def _difference_1d(cells: int, h: float) -> sp.csr_matrix:
    """İç yüzlerde (u_{i+1} - u_i)/h; şekil (cells-1, cells)"""
    ones = np.ones(cells - 1)
    return sp.diags([-ones, ones], [0, 1], shape=(cells - 1, cells), format="csr") / h


def _average_1d(cells: int) -> sp.csr_matrix:
    """İç yüzlerde (u_i + u_{i+1})/2"""
    halves = np.full(cells - 1, 0.5)
    return sp.diags([halves, halves], [0, 1], shape=(cells - 1, cells), format="csr")


def _central_1d(cells: int, h: float, parity: float) -> sp.csr_matrix:
    """
    Hücre merkezinde (u_{i+1} - u_{i-1})/(2h).
    Hayalet değer parity·u_sınır: Dirichlet için -1, diğerleri için +1.
    """
    ones = np.ones(cells - 1)
    matrix = sp.diags([-ones, ones], [-1, 1], shape=(cells, cells), format="lil")
    matrix[0, 0] = -parity
    matrix[cells - 1, cells - 1] = parity
    return matrix.tocsr() / (2.0 * h)


def _along_axis(operator: sp.spmatrix, axis: int, cells: Sequence[int]) -> sp.csr_matrix:
    """1B operatörü C-sıralı düzleştirilmiş ızgarada verilen eksene uygula"""
    factors = [sp.identity(c, format="csr") for c in cells]
    factors[axis] = operator
    result = factors[0]
    for factor in factors[1:]:
        result = sp.kron(result, factor, format="csr")
    return sp.csr_matrix(result)


def _check_ellipticity(a: List[List[np.ndarray]], t: float) -> None:
    """Simetri ve pozitif tanımlılık (montaj anında DA4 kontrolü)"""
    dim = len(a)
    if dim == 1:
        if np.min(a[0][0]) <= 0:
            raise AssumptionViolation("DA4", f"a_11 pozitif olmalıdır, min={np.min(a[0][0]):.6g}", f"t={t}")
        return

    if np.max(np.abs(a[0][1] - a[1][0])) > _SYMMETRY_TOLERANCE:
        raise AssumptionViolation("DA4", "a_12 = a_21 simetrisi sağlanmıyor", f"t={t}")
    mean = 0.5 * (a[0][0] + a[1][1])
    radius = np.sqrt((0.5 * (a[0][0] - a[1][1])) ** 2 + a[0][1] ** 2)
    smallest = np.min(mean - radius)
    if smallest <= 0:
        raise AssumptionViolation("DA4", f"Difüzyon matrisi pozitif tanımlı değil, min özdeğer={smallest:.6g}", f"t={t}")


@dataclass(frozen=True, eq=False)
class DiscreteForm:
    """
    t anında montajlanmış B^k[t; ·, ·].
    stiffness: S (vᵀ S u ≈ B), operator: A = S / V (u' = -A u).
    """

    grid: SpatialGrid
    t: float
    bc: BoundaryKind
    stiffness: sp.csr_matrix

    @property
    def operator(self) -> sp.csr_matrix:
        return sp.csr_matrix(self.stiffness / self.grid.cell_volume)

    @property
    def bandwidth(self) -> int:
        coo = self.stiffness.tocoo()
        if coo.nnz == 0:
            return 0
        return int(np.max(np.abs(coo.row - coo.col)))

    def apply(self, u: np.ndarray) -> np.ndarray:
        """A u (ızgara şeklinde)"""
        return (self.operator @ np.ravel(u)).reshape(self.grid.shape)

    def value(self, u: Union[np.ndarray, GridFunction], v: Union[np.ndarray, GridFunction]) -> float:
        """B[t; u, v] ≈ vᵀ S u"""
        u_flat = self._flatten(u)
        v_flat = self._flatten(v)
        return float(v_flat @ (self.stiffness @ u_flat))

    def _flatten(self, w) -> np.ndarray:
        if isinstance(w, GridFunction):
            if w.n != 1 or w.grid != self.grid:
                raise GridMismatchError("Form değeri tek bileşenli ve aynı ızgarada fonksiyon ister")
            w = w.values[0]
        w = np.asarray(w, dtype=float)
        if w.shape != self.grid.shape:
            raise GridMismatchError(f"Beklenen şekil {self.grid.shape}, alınan {w.shape}")
        return w.ravel()


def assemble_form(component: ComponentCoefficients, t: float, grid: SpatialGrid) -> DiscreteForm:
    """
    a₀^k bileşeni için t anında ayrık formu kur.

    Raises:
        AssumptionViolation: DA4 (elliptiklik/simetri) ihlali
        GridMismatchError: Boyut uyuşmazlığı
    """
    if component.dim != grid.dim:
        raise GridMismatchError(f"Katsayı boyutu {component.dim}, ızgara boyutu {grid.dim}")

    cells = grid.cells
    size = grid.size
    volume = grid.cell_volume
    a = [[component.a[i][j].sample(t, grid).ravel() for j in range(grid.dim)] for i in range(grid.dim)]
    _check_ellipticity(a, t)

    stiffness = sp.csr_matrix((size, size))
    for axis in range(grid.dim):
        h = grid.spacing[axis]
        gradient = _along_axis(_difference_1d(cells[axis], h), axis, cells)
        average = _along_axis(_average_1d(cells[axis]), axis, cells)

        a_face = average @ a[axis][axis]
        first_a = average @ component.a_first[axis].sample(t, grid).ravel()
        first_b = average @ component.b_first[axis].sample(t, grid).ravel()

        stiffness = stiffness + gradient.T @ sp.diags(a_face) @ gradient
        stiffness = stiffness + gradient.T @ sp.diags(first_a) @ average
        stiffness = stiffness - average.T @ sp.diags(first_b) @ gradient

    if grid.dim == 2:
        parity = -1.0 if component.bc is BoundaryKind.DIRICHLET else 1.0
        d1 = _along_axis(_central_1d(cells[0], grid.spacing[0], parity), 0, cells)
        d2 = _along_axis(_central_1d(cells[1], grid.spacing[1], parity), 1, cells)
        stiffness = stiffness + d1.T @ sp.diags(a[0][1]) @ d2 + d2.T @ sp.diags(a[1][0]) @ d1

    stiffness = volume * stiffness

    boundary = np.zeros(size)
    if component.bc is BoundaryKind.ROBIN:
        d0 = component.d0.sample(t, grid).ravel()
    for face in grid.faces:
        axis = int(face[1]) - 1
        h = grid.spacing[axis]
        mask = grid.boundary_mask(face).ravel()
        if component.bc is BoundaryKind.DIRICHLET:
            # hayalet düğüm: sınırda u = 0, yarım hücre mesafesi
            boundary[mask] += 2.0 * a[axis][axis][mask] * volume / h ** 2
        elif component.bc is BoundaryKind.ROBIN:
            boundary[mask] += d0[mask] * volume / h

    stiffness = sp.csr_matrix(stiffness + sp.diags(boundary))
    return DiscreteForm(grid=grid, t=float(t), bc=component.bc, stiffness=stiffness)
