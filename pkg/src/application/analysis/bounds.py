"""
Açık Sabitler
Gronwall tipi sınır ve düzleştirme sabiti M̄.
"""

import math
from dataclasses import dataclass

from ...domain import Exponent, ScheduleRequiredError, ValidationError


@dataclass(frozen=True)
class BoundConstants:
    """
    Sınırları besleyen sabitler.
    M, γ uydurulmuş; K örneklenmiş; T ufuk uzunluğu (T − s).
    """
    M: float
    gamma: float
    K: float
    n: int
    N: int
    T: float

    def as_inputs(self) -> dict:
        return {"M": self.M, "gamma": self.gamma, "K": self.K, "n": self.n, "N": self.N, "T": self.T}


def _check_constants(M: float, gamma: float, K: float) -> None:
    if M < 1.0:
        raise ValidationError(f"M ≥ 1 olmalıdır, alınan: {M}")
    if gamma < 0.0:
        raise ValidationError(f"γ ≥ 0 olmalıdır, alınan: {gamma}")
    if K < 0.0:
        raise ValidationError(f"K ≥ 0 olmalıdır, alınan: {K}")


def gronwall_bound(M: float, gamma: float, K: float, n: int, T: float) -> float:
    """(M·e^γ·(1 + n²K)·exp(n²KMe^γ))^{⌈T⌉}"""
    _check_constants(M, gamma, K)
    if T <= 0:
        raise ValidationError(f"T pozitif olmalıdır, alınan: {T}")
    nk = n * n * K
    factor = M * math.exp(gamma) * (1.0 + nk) * math.exp(nk * M * math.exp(gamma))
    return factor ** math.ceil(T - 1e-12)


def smoothing_bound_mbar(M: float, gamma: float, K: float, n: int, N: int, p, q, r) -> float:
    """
    M̄ = Me^γ(1 + e^γ(1+n²K)n²KM/(1−δ)·exp(n²KMe^γ) + n²K/(1−δr′)^{1/r′}),
    δ = N/2(1/p − 1/q).

    Raises:
        ValidationError: p > q veya geçersiz sabitler
        ScheduleRequiredError: δ < 1/r′ koşulu sağlanmıyor
    """
    _check_constants(M, gamma, K)
    p_exp, q_exp, r_exp = Exponent.parse(p), Exponent.parse(q), Exponent.parse(r)
    delta = 0.5 * N * (p_exp.reciprocal - q_exp.reciprocal)
    if delta < 0:
        raise ValidationError(f"p ≤ q olmalıdır, alınan: p={p_exp}, q={q_exp}")

    r_conj = r_exp.conjugate()
    if delta > 0 and delta >= r_conj.reciprocal:
        raise ScheduleRequiredError(
            f"N/2(1/p − 1/q) = {delta:.6g} ≥ 1/r′ = {r_conj.reciprocal:.6g}; regularization_schedule kullanın",
            f"N={N}, p={p_exp}, q={q_exp}, r={r_exp}",
        )

    nk = n * n * K
    growth = math.exp(gamma)
    middle = growth * (1.0 + nk) * nk * M / (1.0 - delta) * math.exp(nk * M * growth)
    if r_conj.is_infinite:
        last = nk
    else:
        last = nk / (1.0 - delta * r_conj.value) ** (1.0 / r_conj.value)
    return M * growth * (1.0 + middle + last)
