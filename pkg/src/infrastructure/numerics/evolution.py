"""
θ-Şeması Evolüsyon Ailesi
U⁰_{a₀}(t, s): bileşenler arası bağlaşımsız yüksek mertebe kısmın ayrık çözüm ailesi.

Tek adım:  (I + θ·dt·A_{j+1}) u_{j+1} = (I − (1−θ)·dt·A_j) u_j
LU çarpanlaştırmaları (k, adım) başına önbelleğe alınır; zamandan bağımsız
katsayılarda bileşen başına tek çarpanlaştırma yeterlidir.
"""

import logging
import threading
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import splu

from ...domain.coefficients import ComponentCoefficients, ParameterPoint
from ...domain.entities import SpatialGrid, TimeGrid
from ...domain.exceptions import GridMismatchError, SolverError
from ...domain.interfaces import IEvolutionFamily
from ...domain.value_objects import AdjointMode, Scheme
from .assembly import DiscreteForm, assemble_form

logger = logging.getLogger(__name__)


class EvolutionFamily(IEvolutionFamily):
    """
    Ayrık evolüsyon ailesi.
    Oluşturulduktan sonra değişmez; önbellek kilitle korunur ve
    iş parçacıkları arasında salt okunur paylaşılabilir.
    """

    def __init__(
        self,
        components: Sequence[ComponentCoefficients],
        grid: SpatialGrid,
        time_grid: TimeGrid,
        scheme: Scheme = Scheme.CRANK_NICOLSON,
        adjoint_mode: AdjointMode = AdjointMode.TRANSPOSE,
    ):
        self._components = tuple(components)
        if any(c.dim != grid.dim for c in self._components):
            raise GridMismatchError("Bileşen katsayıları ızgara boyutuyla uyumsuz")
        self._grid = grid
        self._time_grid = time_grid
        self._scheme = Scheme.parse(scheme)
        self._adjoint_mode = AdjointMode.parse(adjoint_mode)
        self._time_dependent = tuple(c.is_time_dependent for c in self._components)

        self._forms: Dict[Tuple[int, int], DiscreteForm] = {}
        self._factors: Dict[Tuple[int, int], object] = {}
        self._adjoint_family: Optional["EvolutionFamily"] = None
        self._lock = threading.RLock()

    @classmethod
    def for_parameter(
        cls,
        parameter: ParameterPoint,
        grid: SpatialGrid,
        time_grid: TimeGrid,
        scheme: Scheme = Scheme.CRANK_NICOLSON,
        adjoint_mode: AdjointMode = AdjointMode.TRANSPOSE,
    ) -> "EvolutionFamily":
        """Parametre noktasının yalnızca a₀ kısmını kullanır"""
        return cls(parameter.components, grid, time_grid, scheme, adjoint_mode)

    @property
    def grid(self) -> SpatialGrid:
        return self._grid

    @property
    def time_grid(self) -> TimeGrid:
        return self._time_grid

    @property
    def n(self) -> int:
        return len(self._components)

    @property
    def scheme(self) -> Scheme:
        return self._scheme

    @property
    def adjoint_mode(self) -> AdjointMode:
        return self._adjoint_mode

    @property
    def components(self) -> Tuple[ComponentCoefficients, ...]:
        return self._components

    @property
    def theta(self) -> float:
        return self._scheme.theta

    def with_time_grid(self, time_grid: TimeGrid) -> "EvolutionFamily":
        return EvolutionFamily(self._components, self._grid, time_grid, self._scheme, self._adjoint_mode)

    def adjoint(self) -> "EvolutionFamily":
        """a₀* = (a_ji, −b_i, −a_i, d₀) katsayılarının ailesi"""
        with self._lock:
            if self._adjoint_family is None:
                self._adjoint_family = EvolutionFamily(
                    [c.adjoint() for c in self._components],
                    self._grid,
                    self._time_grid,
                    self._scheme,
                    self._adjoint_mode,
                )
            return self._adjoint_family

    # ------------------------------------------------------------------
    # Operatörler
    # ------------------------------------------------------------------

    def _key(self, k: int, index: int) -> Tuple[int, int]:
        return (k, index if self._time_dependent[k] else 0)

    def form(self, k: int, index: int) -> DiscreteForm:
        """t_index anında k bileşeninin formu"""
        key = self._key(k, index)
        with self._lock:
            form = self._forms.get(key)
            if form is None:
                t = self._time_grid.time_at(key[1]) if self._time_dependent[k] else self._time_grid.t0
                form = assemble_form(self._components[k], t, self._grid)
                self._forms[key] = form
            return form

    def operator(self, k: int, index: int) -> sp.csr_matrix:
        return self.form(k, index).operator

    def _implicit_matrix(self, k: int, index: int) -> sp.csc_matrix:
        dt = self._time_grid.dt
        identity = sp.identity(self._grid.size, format="csr")
        return sp.csc_matrix(identity + self.theta * dt * self.operator(k, index))

    def _factor(self, k: int, index: int):
        key = self._key(k, index)
        with self._lock:
            factor = self._factors.get(key)
            if factor is None:
                matrix = self._implicit_matrix(k, index)
                self._warn_if_not_dominant(matrix, k, index)
                try:
                    factor = splu(matrix)
                except RuntimeError as e:
                    raise SolverError(f"Örtük adım çözülemedi (k={k}, adım={index})", str(e)) from e
                self._factors[key] = factor
            return factor

    def _warn_if_not_dominant(self, matrix: sp.spmatrix, k: int, index: int) -> None:
        diagonal = np.abs(matrix.diagonal())
        off_diagonal = np.asarray(abs(matrix).sum(axis=1)).ravel() - diagonal
        if np.any(diagonal < off_diagonal):
            logger.warning(f"Örtük matris köşegen baskın değil (k={k}, adım={index}); dt küçültülebilir")

    # ------------------------------------------------------------------
    # Adım parçaları
    # ------------------------------------------------------------------

    def explicit_part(self, index: int, values: np.ndarray) -> np.ndarray:
        """(I − (1−θ)·dt·A_index) u"""
        values = np.asarray(values, dtype=float)
        weight = (1.0 - self.theta) * self._time_grid.dt
        if weight == 0.0:
            return np.array(values, copy=True)
        result = np.empty_like(values)
        for k in range(self.n):
            flat = values[k].ravel()
            result[k] = (flat - weight * (self.operator(k, index) @ flat)).reshape(self._grid.shape)
        return result

    def implicit_solve(self, index: int, rhs: np.ndarray) -> np.ndarray:
        """(I + θ·dt·A_index) x = rhs"""
        rhs = np.asarray(rhs, dtype=float)
        result = np.empty_like(rhs)
        for k in range(self.n):
            result[k] = self._factor(k, index).solve(rhs[k].ravel()).reshape(self._grid.shape)
        return result

    def _explicit_part_transposed(self, index: int, values: np.ndarray) -> np.ndarray:
        weight = (1.0 - self.theta) * self._time_grid.dt
        if weight == 0.0:
            return np.array(values, copy=True)
        result = np.empty_like(values)
        for k in range(self.n):
            flat = values[k].ravel()
            result[k] = (flat - weight * (self.operator(k, index).T @ flat)).reshape(self._grid.shape)
        return result

    def _implicit_solve_transposed(self, index: int, rhs: np.ndarray) -> np.ndarray:
        result = np.empty_like(rhs)
        for k in range(self.n):
            result[k] = self._factor(k, index).solve(rhs[k].ravel(), trans="T").reshape(self._grid.shape)
        return result

    # ------------------------------------------------------------------
    # IEvolutionFamily
    # ------------------------------------------------------------------

    def step(self, index: int, values: np.ndarray) -> np.ndarray:
        """U(t_{index+1}, t_index)"""
        return self.implicit_solve(index + 1, self.explicit_part(index, values))

    def adjoint_step(self, index: int, values: np.ndarray) -> np.ndarray:
        """
        U(t_{index+1}, t_index)*.
        transpose: tek adım operatörünün tam devriği (hücre hacmi sabit).
        rediscretize: adjoint katsayılarla geriye doğru θ-adımı.
        """
        values = np.asarray(values, dtype=float)
        if self._adjoint_mode is AdjointMode.TRANSPOSE:
            return self._explicit_part_transposed(index, self._implicit_solve_transposed(index + 1, values))
        adjoint = self.adjoint()
        return adjoint.implicit_solve(index, adjoint.explicit_part(index + 1, values))

    def __repr__(self) -> str:
        return (
            f"EvolutionFamily(n={self.n}, cells={self._grid.cells}, scheme={self._scheme.value}, "
            f"adjoint={self._adjoint_mode.value}, dt={self._time_grid.dt})"
        )
