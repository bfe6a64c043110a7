"""
Sınır Doğrulaması
Çözülmüş yörüngeleri Gronwall ve düzleştirme sınırlarıyla karşılaştırır.
Başarısız sınırlar rapor edilir, hata olarak fırlatılmaz.
"""

import logging

import numpy as np

from ...domain import (
    Exponent,
    HistorySegment,
    ScheduleRequiredError,
    Trajectory,
    initial_datum_norm,
    lp_norms_over_time,
)
from ..dtos import EstimateReport
from .bounds import BoundConstants, gronwall_bound, smoothing_bound_mbar
from .schedule import regularization_schedule

logger = logging.getLogger(__name__)


def _solved_part(traj: Trajectory, h: HistorySegment):
    """[s, T] düğümleri ve s'den itibaren geçen süreler"""
    m = h.steps_per_delay
    return traj.states[m:], traj.times[m:] - traj.start


def verify_gronwall(traj: Trajectory, h: HistorySegment, consts: BoundConstants, p="2", r=None) -> EstimateReport:
    """sup_t ‖u(t)‖_{L_p} ≤ gronwall_bound·‖u₀‖"""
    r_exp = h.r if r is None else Exponent.parse(r)
    states, _ = _solved_part(traj, h)
    measured = float(np.max(lp_norms_over_time(states, p, traj.grid.cell_volume)))
    datum = initial_datum_norm(h, p, r_exp)
    theoretical = gronwall_bound(consts.M, consts.gamma, consts.K, consts.n, consts.T) * datum
    report = EstimateReport(
        bound_name=f"gronwall_p{Exponent.parse(p)}",
        theoretical=theoretical,
        measured=measured,
        inputs={**consts.as_inputs(), "p": str(Exponent.parse(p)), "r": str(r_exp), "datum_norm": datum},
    )
    logger.info(f"Gronwall: ölçülen={measured:.6g}, teorik={theoretical:.6g}, pay={report.margin:.3e}")
    return report


def verify_smoothing(
    traj: Trajectory,
    h: HistorySegment,
    consts: BoundConstants,
    p="2",
    q="2",
    r=None,
) -> EstimateReport:
    """
    δ < 1/r′ ise: max_t (t − s)^δ‖u(t)‖_{L_q} ≤ M̄‖u₀‖ (t ∈ (s, T]).
    Aksi halde çizelgeli durum: [Θ+1, T] üzerinde sup‖u(t)‖_{L_q} ≤ M̃‖u₀‖,
    M̃ yerine zincir adımlarının M̄ çarpımı kullanılır.

    Raises:
        ScheduleRequiredError: Çizelgeli durumda ufuk Θ + 1'den kısa
    """
    p_exp, q_exp = Exponent.parse(p), Exponent.parse(q)
    r_exp = h.r if r is None else Exponent.parse(r)
    states, offsets = _solved_part(traj, h)
    norms = lp_norms_over_time(states, q_exp, traj.grid.cell_volume)
    datum = initial_datum_norm(h, p_exp, r_exp)
    delta = 0.5 * consts.N * (p_exp.reciprocal - q_exp.reciprocal)
    inputs = {**consts.as_inputs(), "p": str(p_exp), "q": str(q_exp), "r": str(r_exp), "datum_norm": datum}

    try:
        mbar = smoothing_bound_mbar(consts.M, consts.gamma, consts.K, consts.n, consts.N, p_exp, q_exp, r_exp)
    except ScheduleRequiredError:
        return _verify_scheduled(norms, offsets, datum, consts, p_exp, q_exp, r_exp, inputs)

    positive = offsets > 0
    measured = float(np.max(offsets[positive] ** delta * norms[positive]))
    report = EstimateReport(
        bound_name=f"smoothing_p{p_exp}_q{q_exp}",
        theoretical=mbar * datum,
        measured=measured,
        inputs={**inputs, "Mbar": mbar, "delta": delta},
    )
    logger.info(f"Düzleştirme (p={p_exp}, q={q_exp}): ölçülen={measured:.6g}, teorik={report.theoretical:.6g}")
    return report


def _verify_scheduled(norms, offsets, datum, consts, p_exp, q_exp, r_exp, inputs) -> EstimateReport:
    schedule = regularization_schedule(consts.N, p_exp, q_exp, r_exp)
    window = offsets >= schedule.Theta + 1 - 1e-9
    if not np.any(window):
        raise ScheduleRequiredError(
            f"Çizelgeli düzleştirme için ufuk en az Θ + 1 = {schedule.Theta + 1} olmalıdır",
            f"T − s = {consts.T}",
        )

    mtilde = 1.0
    for lo, hi in zip(schedule.chain[:-1], schedule.chain[1:]):
        mtilde *= smoothing_bound_mbar(consts.M, consts.gamma, consts.K, consts.n, consts.N, lo, hi, r_exp)

    measured = float(np.max(norms[window]))
    report = EstimateReport(
        bound_name=f"smoothing_scheduled_p{p_exp}_q{q_exp}",
        theoretical=mtilde * datum,
        measured=measured,
        inputs={**inputs, "Mtilde": mtilde, "Theta": schedule.Theta, "m0": schedule.m0},
    )
    logger.info(f"Çizelgeli düzleştirme: Θ={schedule.Theta}, m₀={schedule.m0}, pay={report.margin:.3e}")
    return report
