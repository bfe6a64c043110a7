"""
Weak-* Sürekli Bağımlılık Çalışması
Salınımlı c₀/c₁ dizileri için pencere hatalarının m'ye göre eğilimi.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from ...domain import (
    Exponent,
    HistorySegment,
    IEvolutionFamily,
    IProgressNotifier,
    ParameterPoint,
    SampleBox,
    ScheduleRequiredError,
    StudyMemberEvent,
    Trajectory,
    ValidationError,
    lp_norms_over_time,
)
from ..dtos import ConvergenceStudy, PicardConfig, StudySettings
from ..services.multiplication import weakstar_oscillate
from ..services.validation import check_higher_order_fixed
from ..solvers import solve_marching, solve_picard
from .schedule import waiting_time

logger = logging.getLogger(__name__)


FamilyBuilder = Callable[[ParameterPoint], IEvolutionFamily]

VARIANTS = ("windowed", "short")
CONDITION_POLICIES = ("warn", "fail")


def trend_passes(errors: Sequence[float], slack: float = 1.5, final_ratio: float = 0.2) -> bool:
    """
    err_{i+1} ≤ slack·err_i her i için ve err_son/err_ilk ≤ final_ratio.
    Tümü sıfır olan hata dizisi geçer.
    """
    values = [float(e) for e in errors]
    if not values:
        return False
    if all(e == 0.0 for e in values):
        return True
    if values[0] == 0.0:
        return False
    nonincreasing = all(b <= slack * a for a, b in zip(values[:-1], values[1:]))
    return nonincreasing and values[-1] / values[0] <= final_ratio


def _window(settings: StudySettings, h: HistorySegment, fam: IEvolutionFamily) -> Tuple[float, float]:
    time_grid = fam.time_grid
    s, T = time_grid.t0, time_grid.T
    horizon = T - s

    if settings.variant == "windowed":
        if horizon <= 2.0:
            raise ValidationError(f"windowed çalışma T − s > 2 gerektirir, alınan: {horizon}")
        if settings.window is not None:
            return float(settings.window[0]), float(settings.window[1])
        r0 = Exponent.parse(settings.r0) if settings.r0 is not None else h.r
        start = s + waiting_time(fam.grid.dim, r0) + 1.0 + time_grid.dt
        if start > T:
            raise ValidationError(f"Pencere başlangıcı Θ + 1 + dt = {start - s:g} ufku aşıyor (T − s = {horizon:g})")
        return start, T

    if horizon > 1.0 + 1e-12:
        raise ValidationError(f"short çalışma T − s ≤ 1 gerektirir, alınan: {horizon}")
    delta = 0.5 * fam.grid.dim * (Exponent.parse(settings.p).reciprocal - Exponent.parse(settings.q).reciprocal)
    r_conj = h.r.conjugate()
    if delta > 0 and delta >= r_conj.reciprocal:
        message = f"N/2(1/p − 1/q) = {delta:.4g} ≥ 1/r′ = {r_conj.reciprocal:.4g}"
        if settings.condition_policy == "fail":
            raise ScheduleRequiredError(message, "condition_policy=fail")
        logger.warning(f"Kısa ufuk koşulu ihlal edildi: {message}")
    if settings.window is not None:
        return float(settings.window[0]), float(settings.window[1])
    return s, T


def _solve(point, fam, h, settings: StudySettings, quadrature, picard: Optional[PicardConfig], mu) -> Trajectory:
    if settings.solver == "picard":
        cfg = picard or PicardConfig(quadrature=quadrature)
        if cfg.mu is None:
            cfg = PicardConfig(mu=mu, tol=cfg.tol, max_iters=cfg.max_iters,
                               quadrature=cfg.quadrature, adaptive=cfg.adaptive, p=cfg.p)
        return solve_picard(point, fam, h, cfg).trajectory
    return solve_marching(point, fam, h, quadrature)


def weakstar_study(
    base: ParameterPoint,
    family_builder: FamilyBuilder,
    h: HistorySegment,
    settings: StudySettings,
    box: Optional[SampleBox] = None,
    quadrature="trapezoid",
    threads: int = 1,
    picard: Optional[PicardConfig] = None,
    mu: Optional[float] = None,
    notifier: Optional[IProgressNotifier] = None,
) -> ConvergenceStudy:
    """
    Her m için weakstar_oscillate(base, m) çözülür;
    err_m = sup_{t∈pencere}‖u_m(t) − u(t)‖_{L_q}.

    Raises:
        ValidationError: Geçersiz m dizisi, varyant veya ufuk
        AssumptionViolation: DA2 (K sınırı) veya DA5
    """
    ms = tuple(int(m) for m in settings.ms)
    if not ms or any(b <= a for a, b in zip(ms[:-1], ms[1:])) or ms[0] < 1:
        raise ValidationError(f"ms pozitif ve kesin artan olmalıdır, alınan: {list(settings.ms)}")
    if settings.variant not in VARIANTS:
        raise ValidationError(f"Geçersiz varyant: {settings.variant}. Mevcut: {list(VARIANTS)}")
    if settings.condition_policy not in CONDITION_POLICIES:
        raise ValidationError(f"Geçersiz condition_policy: {settings.condition_policy}")

    members = [weakstar_oscillate(base, m, settings.amp, settings.mode, box, settings.targets) for m in ms]
    check_higher_order_fixed(base, members)

    fam = family_builder(base)
    window = _window(settings, h, fam)
    logger.info(
        f"Weak-* çalışması: {len(ms)} üye, mod={settings.mode}, amp={settings.amp}, "
        f"pencere=[{window[0]:g}, {window[1]:g}], q={settings.q}"
    )

    reference = _solve(base, fam, h, settings, quadrature, picard, mu)
    indices = reference.time_grid.window_indices(*window)
    if indices.size == 0:
        raise ValidationError(f"Pencerede ızgara noktası yok: {window}")
    volume = reference.grid.cell_volume

    def member_error(point: ParameterPoint) -> float:
        solution = _solve(point, family_builder(point), h, settings, quadrature, picard, mu)
        difference = solution.states[indices] - reference.states[indices]
        return float(np.max(lp_norms_over_time(difference, settings.q, volume)))

    errors = [0.0] * len(ms)
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        futures = [pool.submit(member_error, point) for point in members]
        for index, future in enumerate(futures):
            errors[index] = future.result()
            if notifier:
                notifier.notify_member(StudyMemberEvent(
                    m=ms[index], error=errors[index], index=index, total=len(ms),
                ))

    passed = trend_passes(errors, settings.slack, settings.final_ratio)
    logger.info(f"Weak-* çalışması {'geçti' if passed else 'kaldı'}: hatalar={['%.3e' % e for e in errors]}")
    return ConvergenceStudy(
        ms=ms,
        errors=tuple(errors),
        window=window,
        q=str(Exponent.parse(settings.q)),
        passed=passed,
        variant=settings.variant,
        mode=settings.mode,
        amp=settings.amp,
    )
