"""
Bağlaşım Örnekleyici
c₀, c₁ alanlarının zaman düğümlerinde önbellekli örneklenmesi ve
gecikmeli durumların okunması.
"""

import threading
from collections import OrderedDict
from typing import Tuple

import numpy as np

from ...domain import GridMismatchError, HistorySegment, IEvolutionFamily, ParameterPoint
from ..services.multiplication import apply_mult_fields


class CouplingSampler:
    """
    c_i(t_index, ·) alanları, şekil (n, n, *hücreler).
    Zamandan bağımsız matrisler bir kez örneklenir; diğerleri sınırlı
    LRU önbellekte tutulur.
    """

    def __init__(self, parameter: ParameterPoint, fam: IEvolutionFamily, max_cached: int = 4096):
        if parameter.n != fam.n:
            raise GridMismatchError(f"Parametre n={parameter.n}, evolüsyon ailesi n={fam.n}")
        self._parameter = parameter
        self._grid = fam.grid
        self._time_grid = fam.time_grid
        self._time_dependent = tuple(parameter.coupling_is_time_dependent(i) for i in (0, 1))
        self._max_cached = max_cached
        self._cache: "OrderedDict[Tuple[int, int], np.ndarray]" = OrderedDict()
        self._lock = threading.Lock()

    @property
    def parameter(self) -> ParameterPoint:
        return self._parameter

    def is_zero(self, i: int) -> bool:
        """c_i tüm örneklerde sıfır mı (zamandan bağımsız durumda kesin)"""
        if self._time_dependent[i]:
            return False
        return not np.any(self.fields(i, 0))

    def fields(self, i: int, index: int) -> np.ndarray:
        key = (i, index if self._time_dependent[i] else 0)
        with self._lock:
            cached = self._cache.get(key)
            if cached is not None:
                self._cache.move_to_end(key)
                return cached

        t = self._time_grid.time_at(key[1]) if self._time_dependent[i] else self._time_grid.t0
        fields = self._parameter.coupling_fields(i, t, self._grid)
        fields.setflags(write=False)

        with self._lock:
            self._cache[key] = fields
            if len(self._cache) > self._max_cached:
                self._cache.popitem(last=False)
        return fields

    def apply(self, i: int, index: int, values: np.ndarray) -> np.ndarray:
        """𝒞^i(t_index)·values"""
        return apply_mult_fields(self.fields(i, index), values)


def check_history(h: HistorySegment, fam: IEvolutionFamily) -> None:
    """Geçmiş ile evolüsyon ailesinin ızgara, n ve dt uyumu"""
    if h.grid != fam.grid or h.n != fam.n:
        raise GridMismatchError("Başlangıç verisi evolüsyon ailesinin ızgarasında değil")
    if h.steps_per_delay != fam.time_grid.steps_per_delay:
        raise GridMismatchError(
            f"Geçmiş örnek sayısı {h.steps_per_delay}, beklenen {fam.time_grid.steps_per_delay}"
        )


def delayed_values(tail: np.ndarray, states: np.ndarray, j: int) -> np.ndarray:
    """
    u(t_j − 1): j < m için geçmiş kuyruğu, aksi halde çözülmüş durum u_{j−m}.
    states[0] başlangıç anındaki değerdir (head).
    """
    m = tail.shape[0]
    return tail[j] if j < m else states[j - m]
