"""
Domain Norms
Ayrık normlar ve dualite eşlemesi: hücre hacmi ağırlıklı Riemann toplamları
(uzayda orta nokta, zamanda sol uç nokta).
"""

from typing import Union

import numpy as np

from .entities import GridFunction, HistorySegment, Trajectory
from .exceptions import GridMismatchError, ValidationError
from .value_objects import Exponent


ExponentLike = Union[Exponent, float, int, str]


def rescaled_lp(magnitudes: np.ndarray, p: float, weight: float = 1.0, axis=None) -> np.ndarray:
    """
    peak · (Σ (|v| / peak)^p · weight)^{1/p}, peak = max |v| (axis boyunca).
    Terimler ≤ 1; büyük p için toplam sonlu ve pozitif kalır.
    """
    magnitudes = np.abs(np.asarray(magnitudes, dtype=float))
    peak = np.max(magnitudes, axis=axis, keepdims=True)
    scale = np.where(peak > 0.0, peak, 1.0)
    total = np.sum((magnitudes / scale) ** p, axis=axis) * weight
    return np.reshape(peak, np.shape(total)) * total ** (1.0 / p)


def nodal_lp(values: np.ndarray, p: Exponent, cell_volume: float) -> float:
    """Son eksenler uzay, ilk eksen bileşen olmak üzere tek bir durum normu"""
    if values.size == 0:
        return 0.0
    if p.is_infinite:
        return float(np.max(np.abs(values)))
    return float(rescaled_lp(values, p.value, cell_volume))


def lp_norm(u: GridFunction, p: ExponentLike) -> float:
    """
    ‖u‖_{L_p(D)^n} = (Σ_k Σ_hücre |u^k|^p · V)^{1/p}; p = ∞ için maksimum.

    Args:
        u: Izgara fonksiyonu
        p: Lebesgue üssü (≥ 1 veya ∞)
    """
    try:
        exponent = Exponent.parse(p)
    except ValueError as e:
        raise ValidationError(str(e)) from e
    return nodal_lp(u.values, exponent, u.grid.cell_volume)


def lp_norms_over_time(states: np.ndarray, p: ExponentLike, cell_volume: float) -> np.ndarray:
    """Durum yığını (zaman, n, hücreler) için zaman başına L_p normları"""
    exponent = Exponent.parse(p)
    axes = tuple(range(1, states.ndim))
    if exponent.is_infinite:
        return np.max(np.abs(states), axis=axes)
    return rescaled_lp(states, exponent.value, cell_volume, axis=axes)


def duality_pairing(u: GridFunction, v: GridFunction) -> float:
    """⟨u, v⟩ = Σ_k Σ_hücre u^k v^k · V"""
    if u.grid != v.grid or u.n != v.n:
        raise GridMismatchError("Dualite eşlemesi için aynı ızgara ve aynı n gerekli")
    return float(np.sum(u.values * v.values) * u.grid.cell_volume)


def history_norm(h: HistorySegment, r: ExponentLike, p: ExponentLike) -> float:
    """
    ‖u₀⁽²⁾‖_{L_r((-1,0), L_p)}: sol uç nokta dikdörtgen kuralı.
    r = ∞ için örnekler üzerinde maksimum.
    """
    if h.steps_per_delay == 0:
        raise ValidationError("Geçmiş boş")
    r_exp = Exponent.parse(r)
    norms = lp_norms_over_time(h.tail, p, h.grid.cell_volume)
    if r_exp.is_infinite:
        return float(np.max(norms))
    return float(rescaled_lp(norms, r_exp.value, h.dt))


def initial_datum_norm(h: HistorySegment, p: ExponentLike, r: ExponentLike = None) -> float:
    """Çarpım uzayı (toplam) normu: ‖u₀⁽¹⁾‖_{L_p} + ‖u₀⁽²⁾‖_{L_r((-1,0),L_p)}"""
    r_value = h.r if r is None else r
    return lp_norm(h.head, p) + history_norm(h, r_value, p)


def traj_sup_norm(w: Trajectory, t0: float, t1: float, q: ExponentLike) -> float:
    """[t0, t1] içindeki ızgara zamanlarında max ‖w(t)‖_{L_q}"""
    if t1 < t0:
        raise ValidationError(f"Boş zaman penceresi: [{t0}, {t1}]")
    indices = w.time_grid.window_indices(t0, t1)
    if indices.size == 0:
        raise ValidationError(f"Zaman penceresinde ızgara noktası yok: [{t0}, {t1}]")
    norms = lp_norms_over_time(w.states[indices], q, w.grid.cell_volume)
    return float(np.max(norms))
