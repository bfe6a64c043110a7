"""
Çarpım Operatörleri
𝒞⁰_a(t), 𝒞¹_a(t), K sınırı ve weak-* salınımlı katsayı dizileri.
"""

import logging
import math
from typing import Iterable, Sequence, Tuple

import numpy as np
from scipy.integrate import trapezoid

from ...domain import (
    AssumptionViolation,
    GridFunction,
    GridMismatchError,
    MatrixSample,
    ParameterPoint,
    SampleBox,
    ValidationError,
    matrix_norm,
)
from ...domain.value_objects import Exponent
from ...infrastructure.expressions import BinaryOp, Call, Number, Variable, shifted

logger = logging.getLogger(__name__)


OSCILLATION_MODES = ("time", "space", "constant")
COUPLING_TARGETS = ("c0", "c1")

# K kontrolünde yuvarlama payı
_K_TOLERANCE = 1e-12


def apply_mult_fields(fields: np.ndarray, values: np.ndarray) -> np.ndarray:
    """(𝒞u)^k = Σ_l c^{kl}·u^l; fields (n, n, *hücreler), values (n, *hücreler)"""
    return np.einsum("kl...,l...->k...", fields, values)


def apply_mult(a: ParameterPoint, i: int, t: float, u: GridFunction) -> GridFunction:
    """
    𝒞^i_a(t)u noktasal çarpımı.

    Raises:
        GridMismatchError: Bileşen sayısı uyuşmazlığı
    """
    if u.n != a.n:
        raise GridMismatchError(f"Bileşen sayısı uyumsuz: u.n={u.n}, a.n={a.n}")
    fields = a.coupling_fields(i, t, u.grid)
    return GridFunction(u.grid, apply_mult_fields(fields, u.values))


def coupling_sample(a: ParameterPoint, i: int, t: float, grid) -> MatrixSample:
    """c_i(t, ·) için girdi başına L_∞(D) normları"""
    return MatrixSample.from_fields(a.coupling_fields(i, t, grid))


def mult_operator_bound(a: ParameterPoint, i: int, t: float, grid, p) -> float:
    """‖𝒞^i_a(t)‖_{L_p→L_p} ≤ ‖c_i(t,·)‖_{p′,p}"""
    p_exp = Exponent.parse(p)
    return matrix_norm(coupling_sample(a, i, t, grid), p_exp.conjugate(), p_exp)


def sup_bound_K(batch: Sequence[ParameterPoint], box: SampleBox) -> float:
    """
    K = max_{a, i, k, l} sup |c_i^{kl}| (örnekleme kutusu üzerinde).

    Raises:
        ValidationError: Boş batch
    """
    points = list(batch)
    if not points:
        raise ValidationError("sup_bound_K için en az bir parametre noktası gerekli")

    bound = 0.0
    for a in points:
        for i in (0, 1):
            for row in a.coupling(i):
                for expr in row:
                    bound = max(bound, box.sup(expr))
    logger.debug(f"K örneklendi: {bound:.6g} ({len(points)} nokta, {box.times.size} zaman)")
    return bound


def _oscillation_node(m: int, mode: str):
    if mode == "time":
        return Call("sin", (BinaryOp("*", Number(2.0 * math.pi * m), Variable("t")),))
    if mode == "space":
        return Call("sin", (BinaryOp("*", Number(2.0 * math.pi * m), Variable("x1")),))
    return Number(1.0)


def weakstar_oscillate(
    base: ParameterPoint,
    m: int,
    amp: float,
    mode: str = "time",
    box: SampleBox = None,
    targets: Iterable[str] = COUPLING_TARGETS,
) -> ParameterPoint:
    """
    c₀/c₁ girdilerini c + amp·sin(2πm·t) (time), c + amp·sin(2πm·x1) (space)
    veya c + amp (constant, weak-* sıfır olmayan kontrol) ile değiştirir.
    Yüksek mertebe katsayılar (a, b, d) değişmez.

    Raises:
        ValidationError: Geçersiz m, mod veya hedef
        AssumptionViolation: DA2 - pertürbe nokta K sınırını aşıyor
    """
    if mode not in OSCILLATION_MODES:
        raise ValidationError(f"Geçersiz salınım modu: {mode}. Mevcut: {list(OSCILLATION_MODES)}")
    if int(m) != m or m < 1:
        raise ValidationError(f"m pozitif tam sayı olmalıdır, alınan: {m}")
    targets = tuple(targets)
    unknown = [t for t in targets if t not in COUPLING_TARGETS]
    if unknown:
        raise ValidationError(f"Bilinmeyen hedef: {unknown}")

    if amp == 0.0 or not targets:
        return base

    oscillation = _oscillation_node(int(m), mode)

    def perturb(matrix):
        return tuple(tuple(shifted(e, amp, oscillation) for e in row) for row in matrix)

    perturbed = base.with_coupling(
        c0=perturb(base.c0) if "c0" in targets else None,
        c1=perturb(base.c1) if "c1" in targets else None,
    )

    if box is not None:
        k_measured = sup_bound_K([perturbed], box)
        if k_measured > base.K_bound * (1.0 + _K_TOLERANCE):
            raise AssumptionViolation(
                "DA2",
                f"Pertürbe katsayılar K sınırını aşıyor: {k_measured:.6g} > {base.K_bound:.6g}",
                f"m={m}, amp={amp}, mode={mode}",
            )
    return perturbed


def _battery(s: np.ndarray, y: np.ndarray) -> Tuple[np.ndarray, ...]:
    """[0,1]² üzerinde ölçeklenmiş (s: zaman, y: x1) 10 pürüzsüz test fonksiyonu"""
    return (
        np.ones_like(s * y),
        s + 0.0 * y,
        s * (1.0 + y),
        s ** 2 + 0.0 * y,
        np.exp(-s) + 0.0 * y,
        np.cos(np.pi * s) * (1.0 + y ** 2),
        s ** 3 + y,
        1.0 / (1.0 + s) + 0.0 * y,
        np.sin(np.pi * s) * y,
        np.exp(-s) * np.cos(np.pi * y),
    )


def weakstar_functionals(
    base: ParameterPoint,
    perturbed: ParameterPoint,
    box: SampleBox,
    i: int = 0,
    k: int = 0,
    l: int = 0,
) -> np.ndarray:
    """
    ⟨c_m − c, φ_j⟩ (j = 1..10), kutu üzerinde: zamanda yamuk, uzayda orta nokta.
    Seçilen (i, k, l) girdisi için.
    """
    difference = box.sample(perturbed.coupling(i)[k][l]) - box.sample(base.coupling(i)[k][l])
    times = box.times
    if difference.shape[0] == 1 and times.size > 1:
        difference = np.broadcast_to(difference, (times.size,) + difference.shape[1:])

    t_lo, t_hi = float(times[0]), float(times[-1])
    span = t_hi - t_lo if t_hi > t_lo else 1.0
    s = ((times - t_lo) / span).reshape((-1,) + (1,) * box.grid.dim)

    lo, hi = box.grid.extents[0]
    y = (box.grid.coordinates["x1"] - lo) / (hi - lo)
    y = y[np.newaxis]

    values = []
    for phi in _battery(s, y):
        spatial = np.sum(difference * phi, axis=tuple(range(1, difference.ndim))) * box.grid.cell_volume
        if times.size > 1:
            values.append(trapezoid(spatial, times))
        else:
            values.append(float(spatial[0]))
    return np.asarray(values, dtype=float)
