"""
Düzenlileştirme Çizelgesi
m₀ = ⌈Nr′⌉ adımlı p-zinciri ve bekleme süresi Θ = ⌈Nr₀/(r₀ − 1)⌉.
r₀ = ∞ için r₀/(r₀ − 1) = 1 alınır.
"""

import math
from typing import List

from ...domain import Exponent, ValidationError
from ..dtos import ScheduleReport


# Tam sayı tavanlarında yuvarlama payı
_CEIL_TOLERANCE = 1e-12


def _ceil(value: float) -> int:
    return int(math.ceil(value - _CEIL_TOLERANCE))


def bootstrap_steps(N: int, r0) -> int:
    """m₀ = ⌈N·r′⌉; yalnızca r'ye bağlıdır"""
    return _ceil(N * Exponent.parse(r0).conjugate().value)


def waiting_time(N: int, r0) -> int:
    """Θ = ⌈N·r₀/(r₀ − 1)⌉"""
    r = Exponent.parse(r0)
    fraction = 1.0 if r.is_infinite else r.value / (r.value - 1.0)
    return _ceil(N * fraction)


def half_condition(N: int, p_lo: float, p_hi: float, r_conj: Exponent) -> bool:
    """N/2·(1/p_m − 1/p_{m+1}) ≤ 1/(2r′)"""
    gap = 0.5 * N * (Exponent.parse(p_lo).reciprocal - Exponent.parse(p_hi).reciprocal)
    return gap <= 0.5 * r_conj.reciprocal + _CEIL_TOLERANCE


def steps_suffice(m0: int, N: int, r) -> bool:
    """m₀ adım, r için eşit artışlı zinciri geçerli kılar mı (m₀ ≥ N·r′)"""
    return m0 >= N * Exponent.parse(r).conjugate().value - _CEIL_TOLERANCE


def regularization_schedule(N: int, p, q, r0) -> ScheduleReport:
    """
    p = p₀ < p₁ < … < p_{m₀} = q, 1/p_m eşit artışlarla.

    Raises:
        ValidationError: r₀ ≤ 1, p < 1, p ≥ q veya N ∉ {1, 2}
    """
    if N not in (1, 2):
        raise ValidationError(f"N 1 veya 2 olmalıdır, alınan: {N}")
    try:
        p_exp, q_exp = Exponent.parse(p), Exponent.parse(q)
        r_exp = Exponent.parse(r0)
    except ValueError as e:
        raise ValidationError(str(e)) from e
    if r_exp.value <= 1.0:
        raise ValidationError(f"r₀ > 1 olmalıdır, alınan: {r_exp}")
    if p_exp.is_infinite or p_exp.reciprocal <= q_exp.reciprocal:
        raise ValidationError(f"1 ≤ p < q olmalıdır, alınan: p={p_exp}, q={q_exp}")

    r_conj = r_exp.conjugate()
    m0 = bootstrap_steps(N, r_exp)
    theta = waiting_time(N, r_exp)

    increment = (p_exp.reciprocal - q_exp.reciprocal) / m0
    chain: List[float] = [p_exp.value]
    for m in range(1, m0):
        chain.append(1.0 / (p_exp.reciprocal - m * increment))
    chain.append(q_exp.value)

    valid = all(half_condition(N, chain[i], chain[i + 1], r_conj) for i in range(m0))
    return ScheduleReport(
        N=N,
        p=p_exp.value,
        q=q_exp.value,
        r0=r_exp.value,
        r_conjugate=r_conj.value,
        m0=m0,
        Theta=theta,
        chain=tuple(chain),
        valid=valid,
    )
