"""
Evolüsyon Ailesi Analizi
Cocycle ve dualite kontrolleri, (M, γ) uydurması, düzleştirme eğimi,
karşılaştırma ilkesi.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linprog

from ...domain import (
    Exponent,
    GridFunction,
    IEvolutionFamily,
    SolverError,
    ValidationError,
    duality_pairing,
    lp_norm,
)
from ...domain.norms import nodal_lp

logger = logging.getLogger(__name__)


# Ardışık ızgara noktaları arasında geometrik aralıklı ölçüm sayısı
_OFFSETS_PER_START = 12
_RATIO_FLOOR = 1e-300


def cocycle_check(
    fam: IEvolutionFamily,
    s: float,
    t1: float,
    t2: float,
    u: GridFunction,
    p="2",
) -> float:
    """
    ‖U(t₂,t₁)U(t₁,s)u − U(t₂,s)u‖_{L_p}.

    Raises:
        ValidationError: s ≤ t₁ ≤ t₂ sağlanmıyor
        OffGridTimeError: Izgara dışı zaman
    """
    if not s <= t1 <= t2:
        raise ValidationError(f"s ≤ t1 ≤ t2 olmalıdır, alınan: ({s}, {t1}, {t2})")
    composed = fam.propagate(t1, t2, fam.propagate(s, t1, u))
    direct = fam.propagate(s, t2, u)
    return lp_norm(composed - direct, p)


def duality_defect(fam: IEvolutionFamily, s: float, t: float, u: GridFunction, v: GridFunction) -> float:
    """|⟨U(t,s)u, v⟩ − ⟨u, U*(s,t)v⟩| / (‖u‖₂‖v‖₂)"""
    forward = duality_pairing(fam.propagate(s, t, u), v)
    backward = duality_pairing(u, fam.adjoint_propagate(s, t, v))
    scale = lp_norm(u, 2) * lp_norm(v, 2)
    if scale == 0.0:
        return abs(forward - backward)
    return abs(forward - backward) / scale


def comparison_principle_check(fam: IEvolutionFamily, u: GridFunction) -> float:
    """
    Negatif olmayan başlangıç verisi için tüm zamanlardaki en küçük düğüm değeri.
    Örtük Euler ve M-matris yapısında ≥ 0 beklenir.
    """
    if np.min(u.values) < 0:
        raise ValidationError("Karşılaştırma ilkesi için başlangıç verisi negatif olmamalıdır")
    values = np.array(u.values, copy=True)
    smallest = float(np.min(values))
    for index in range(fam.time_grid.steps):
        values = fam.step(index, values)
        smallest = min(smallest, float(np.min(values)))
    return smallest


def trial_battery(fam: IEvolutionFamily, rng: np.random.Generator, random_fields: int = 4) -> List[np.ndarray]:
    """Rastgele alanlar, tek hücre göstergeleri ve sinüs modları"""
    grid = fam.grid
    shape = (fam.n,) + grid.shape
    trials = [rng.standard_normal(shape) for _ in range(random_fields)]

    for fraction in (0.5, 0.25, 0.1):
        bump = np.zeros(shape)
        index = tuple(max(0, min(c - 1, int(fraction * c))) for c in grid.shape)
        bump[(slice(None),) + index] = 1.0
        trials.append(bump)

    for mode in (1, 2, 3):
        field = np.ones(grid.shape)
        for axis in range(grid.dim):
            lo, hi = grid.extents[axis]
            coords = grid.coordinates[f"x{axis + 1}"]
            field = field * np.sin(mode * math.pi * (coords - lo) / (hi - lo))
        trials.append(np.broadcast_to(field, shape).copy())
    return trials


def _power_iteration_norm(
    fam: IEvolutionFamily,
    start: int,
    end: int,
    rng: np.random.Generator,
    iterations: int,
) -> float:
    """‖U(t,s)‖_{L₂→L₂} ≈ √λ_max(U*U)"""
    if end == start:
        return 1.0
    x = rng.standard_normal((fam.n,) + fam.grid.shape)
    x /= np.linalg.norm(x)
    estimate = 0.0
    for _ in range(max(1, iterations)):
        y = fam.adjoint_propagate_values(start, end, fam.propagate_values(start, end, x))
        norm = float(np.linalg.norm(y))
        if norm == 0.0:
            return 0.0
        estimate = math.sqrt(norm)
        x = y / norm
    forward = fam.propagate_values(start, end, x)
    return max(estimate, float(np.linalg.norm(forward)))


@dataclass(frozen=True)
class OperatorNormSample:
    """(t − s) aralığı için ölçülen ‖U(t,s)‖_{L_p→L_q} alt sınırı"""
    span: float
    ratio: float


def measure_operator_norms(
    fam: IEvolutionFamily,
    p,
    q,
    samples: int,
    seed: int = 0,
    power_iterations: int = 0,
) -> List[OperatorNormSample]:
    """
    Örneklenmiş (s, t) çiftleri üzerinde prob oranlarının maksimumu.
    Sonuçlar gerçek operatör normunun alt sınırlarıdır.

    Raises:
        ValidationError: Yetersiz örnek veya p > q
    """
    p_exp, q_exp = Exponent.parse(p), Exponent.parse(q)
    if samples < 1:
        raise ValidationError(f"En az bir (s, t) örneği gerekli, alınan: {samples}")
    if p_exp.reciprocal < q_exp.reciprocal:
        raise ValidationError(f"p ≤ q olmalıdır, alınan: p={p_exp}, q={q_exp}")

    rng = np.random.default_rng(seed)
    steps = fam.time_grid.steps
    dt = fam.time_grid.dt
    volume = fam.grid.cell_volume
    trials = trial_battery(fam, rng)
    use_power = power_iterations > 0 and p_exp.value == 2.0 and q_exp.value == 2.0

    starts = sorted(set(int(s) for s in rng.integers(0, steps, size=samples)))
    results: List[OperatorNormSample] = []

    for start in starts:
        remaining = steps - start
        offsets = np.unique(np.geomspace(1, remaining, num=_OFFSETS_PER_START).astype(int))
        offset_set = set(int(o) for o in offsets)
        best = {int(o): 0.0 for o in offsets}

        for trial in trials:
            denominator = nodal_lp(trial, p_exp, volume)
            if denominator <= _RATIO_FLOOR:
                continue
            values = trial
            for offset in range(1, int(offsets[-1]) + 1):
                values = fam.step(start + offset - 1, values)
                if offset in offset_set:
                    ratio = nodal_lp(values, q_exp, volume) / denominator
                    best[offset] = max(best[offset], ratio)

        for offset, ratio in best.items():
            if use_power:
                ratio = max(ratio, _power_iteration_norm(fam, start, start + offset, rng, power_iterations))
            results.append(OperatorNormSample(span=offset * dt, ratio=ratio))

    logger.debug(f"{len(results)} operatör normu örneği ölçüldü (p={p_exp}, q={q_exp})")
    return results


def smoothing_exponent(N: int, p, q) -> float:
    """δ = N/2·(1/p − 1/q)"""
    return 0.5 * N * (Exponent.parse(p).reciprocal - Exponent.parse(q).reciprocal)


def fit_M_gamma(norm_samples: Sequence[OperatorNormSample], delta: float) -> Tuple[float, float]:
    """
    ratio_i ≤ M τ_i^{−δ} e^{γτ_i} koşulunu sağlayan (M ≥ 1, γ ≥ 0).
    Doğrusal program: min log M + γ·τ_max.
    """
    usable = [s for s in norm_samples if s.span > 0 and s.ratio > _RATIO_FLOOR]
    if not usable:
        return 1.0, 0.0

    spans = np.array([s.span for s in usable])
    targets = np.log([s.ratio for s in usable]) + delta * np.log(spans)
    span_max = float(np.max(spans))

    result = linprog(
        c=[1.0, span_max],
        A_ub=-np.column_stack([np.ones_like(spans), spans]),
        b_ub=-targets,
        bounds=[(0.0, None), (0.0, None)],
        method="highs",
    )
    if not result.success:
        raise SolverError("(M, γ) uydurması başarısız", result.message)

    log_m, gamma = (float(v) for v in result.x)
    return max(1.0, math.exp(log_m)), max(0.0, gamma)


def estimate_M_gamma(
    fam: IEvolutionFamily,
    p,
    q,
    samples: int,
    seed: int = 0,
    power_iterations: int = 20,
) -> Tuple[float, float]:
    """
    ‖U(t,s)‖_{L_p→L_q} ≤ M (t−s)^{−N/2(1/p−1/q)} e^{γ(t−s)} için ampirik (M, γ).
    p = q = 2 için kuvvet iterasyonu prob bataryasına eklenir.
    """
    norm_samples = measure_operator_norms(fam, p, q, samples, seed, power_iterations)
    delta = smoothing_exponent(fam.grid.dim, p, q)
    M, gamma = fit_M_gamma(norm_samples, delta)
    logger.info(f"(M, γ) uyduruldu: M={M:.6g}, γ={gamma:.6g} (p={p}, q={q}, {len(norm_samples)} örnek)")
    return M, gamma


def fit_smoothing_slope(
    fam: IEvolutionFamily,
    t_lo: float,
    t_hi: float,
    points: int = 10,
    cell: Optional[Tuple[int, ...]] = None,
) -> float:
    """
    Tek hücre göstergesi δ için log‖U(t,t0)δ‖_∞/‖δ‖_1 − log t eğimi (t ∈ [t_lo, t_hi]).
    Isı çekirdeği ölçeklemesinde −N/2 beklenir.
    """
    grid = fam.grid
    time_grid = fam.time_grid
    lo_index = time_grid.index_of(time_grid.t0 + t_lo)
    hi_index = time_grid.index_of(time_grid.t0 + t_hi)
    if not 0 < lo_index < hi_index:
        raise ValidationError(f"Geçersiz eğim penceresi: [{t_lo}, {t_hi}]")

    if cell is None:
        cell = tuple(c // 2 for c in grid.shape)
    indicator = np.zeros((fam.n,) + grid.shape)
    indicator[(0,) + tuple(cell)] = 1.0 / grid.cell_volume
    mass = nodal_lp(indicator, Exponent(1.0), grid.cell_volume)

    sample_indices = set(int(i) for i in np.unique(np.geomspace(lo_index, hi_index, num=points).round()))
    times, ratios = [], []
    values = indicator
    for index in range(hi_index):
        values = fam.step(index, values)
        if index + 1 in sample_indices:
            times.append((index + 1) * time_grid.dt)
            ratios.append(float(np.max(np.abs(values))) / mass)

    slope = float(np.polyfit(np.log(times), np.log(ratios), 1)[0])
    logger.debug(f"Düzleştirme eğimi: {slope:.4f} ({len(times)} nokta)")
    return slope
