"""
Varsayım Doğrulama
DA1–DA5 varsayımlarının örnekleme kutusu üzerinde kontrolü.
Her ihlal, etiketiyle birlikte AssumptionViolation olarak yükselir.
"""

import logging
from typing import Sequence

import numpy as np

from ...domain import (
    AssumptionViolation,
    BoundaryKind,
    ParameterPoint,
    SampleBox,
    SpatialGrid,
    ValidationError,
)

logger = logging.getLogger(__name__)


_SYMMETRY_TOLERANCE = 1e-12
_BOUND_TOLERANCE = 1e-12


def ellipticity_directions(dim: int) -> np.ndarray:
    """1B: ±e₁; 2B: ±e₁, ±e₂, (±1, ±1) köşegenleri (8 yön)"""
    if dim == 1:
        return np.array([[1.0], [-1.0]])
    return np.array([
        [1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0],
        [1.0, 1.0], [-1.0, -1.0], [1.0, -1.0], [-1.0, 1.0],
    ])


def _sample(box: SampleBox, expr, assumption_context: str) -> np.ndarray:
    try:
        return box.sample(expr)
    except ValidationError as e:
        raise AssumptionViolation("DA2", f"{assumption_context} sonlu değil: {expr.source}", e.details) from e


def check_domain(grid: SpatialGrid, parameter: ParameterPoint) -> None:
    """DA1: sınırlı bölge (aralık/dikdörtgen), boyut uyumu"""
    if grid.dim != parameter.N:
        raise AssumptionViolation("DA1", f"Bölge boyutu {grid.dim}, katsayı boyutu {parameter.N} ile uyumsuz")
    if not np.isfinite(grid.measure) or grid.measure <= 0:
        raise AssumptionViolation("DA1", f"D sınırlı ve pozitif ölçülü olmalıdır, |D|={grid.measure}")


def check_boundedness(parameter: ParameterPoint, box: SampleBox) -> None:
    """DA2: tüm alanlar sonlu; c₀, c₁ girdileri bildirilen K sınırı içinde"""
    for k, component in enumerate(parameter.components):
        for row in component.a:
            for expr in row:
                _sample(box, expr, f"a^{k + 1}_ij")
        for expr in component.a_first + component.b_first:
            _sample(box, expr, f"birinci mertebe katsayı (k={k + 1})")
        _sample(box, component.d0, f"d0^{k + 1}")

    for i in (0, 1):
        for k, row in enumerate(parameter.coupling(i)):
            for l, expr in enumerate(row):
                sup = float(np.max(np.abs(_sample(box, expr, f"c{i}^{k + 1}{l + 1}"))))
                if sup > parameter.K_bound * (1.0 + _BOUND_TOLERANCE):
                    raise AssumptionViolation(
                        "DA2",
                        f"|c{i}^{k + 1}{l + 1}| ≤ K sağlanmıyor: sup={sup:.6g} > K={parameter.K_bound:.6g}",
                        expr.source,
                    )


def check_boundary_coefficients(parameter: ParameterPoint, box: SampleBox) -> None:
    """DA3: Robin için d₀ ≥ 0; Dirichlet/Neumann için d₀ ≡ 0"""
    for k, component in enumerate(parameter.components):
        values = _sample(box, component.d0, f"d0^{k + 1}")
        if component.bc is BoundaryKind.ROBIN:
            if np.min(values) < 0:
                raise AssumptionViolation("DA3", f"Robin bileşeni {k + 1} için d0 ≥ 0 olmalıdır, min={np.min(values):.6g}")
        elif np.max(np.abs(values)) > 0:
            raise AssumptionViolation(
                "DA3",
                f"{component.bc.value} bileşeni {k + 1} için d0 sıfır fonksiyon olmalıdır",
                component.d0.source,
            )


def check_ellipticity(parameter: ParameterPoint, box: SampleBox) -> None:
    """DA4: a_ij = a_ji ve Σ a_ij ξ_i ξ_j ≥ α₀|ξ|² (yön kümesi + 2×2 özdeğer)"""
    alpha0 = parameter.alpha0
    directions = ellipticity_directions(parameter.N)

    for k, component in enumerate(parameter.components):
        a = [[_sample(box, component.a[i][j], f"a^{k + 1}_{i + 1}{j + 1}") for j in range(parameter.N)]
             for i in range(parameter.N)]
        if parameter.N == 2:
            a01, a10 = np.broadcast_arrays(a[0][1], a[1][0])
            if np.max(np.abs(a01 - a10)) > _SYMMETRY_TOLERANCE:
                raise AssumptionViolation("DA4", f"Bileşen {k + 1}: a_12 = a_21 simetrisi sağlanmıyor")

        for xi in directions:
            quadratic = sum(a[i][j] * xi[i] * xi[j] for i in range(parameter.N) for j in range(parameter.N))
            required = alpha0 * float(np.dot(xi, xi))
            if np.min(quadratic) < required * (1.0 - _BOUND_TOLERANCE):
                raise AssumptionViolation(
                    "DA4",
                    f"Bileşen {k + 1}: Σ a_ij ξ_i ξ_j ≥ α₀|ξ|² ihlal edildi (ξ={tuple(xi)})",
                    f"min={np.min(quadratic):.6g}, gereken={required:.6g}",
                )

        if parameter.N == 2:
            a00, a11, a01 = np.broadcast_arrays(a[0][0], a[1][1], a[0][1])
            smallest = np.min(0.5 * (a00 + a11) - np.sqrt((0.5 * (a00 - a11)) ** 2 + a01 ** 2))
            if smallest < alpha0 * (1.0 - _BOUND_TOLERANCE):
                raise AssumptionViolation(
                    "DA4",
                    f"Bileşen {k + 1}: en küçük özdeğer {smallest:.6g} < α₀={alpha0:.6g}",
                )


def check_higher_order_fixed(base: ParameterPoint, members: Sequence[ParameterPoint]) -> None:
    """DA5: dizi üyeleri yalnızca c₀/c₁'de farklılaşabilir"""
    for index, member in enumerate(members):
        if member.components != base.components:
            raise AssumptionViolation(
                "DA5",
                f"Dizi üyesi {index} yüksek mertebe katsayılarını değiştiriyor",
            )


def has_first_order_terms(parameter: ParameterPoint, box: SampleBox) -> bool:
    """a^k_i veya b^k_i kutu üzerinde sıfırdan farklı mı"""
    return any(
        box.sup(e) > 0.0
        for component in parameter.components
        for e in list(component.a_first) + list(component.b_first)
    )


def validate_parameter(parameter: ParameterPoint, grid: SpatialGrid, box: SampleBox) -> None:
    """
    Tüm varsayımları sırasıyla kontrol et (DA1 → DA4).

    Raises:
        AssumptionViolation: İlk ihlal edilen varsayım
    """
    check_domain(grid, parameter)
    check_boundedness(parameter, box)
    check_boundary_coefficients(parameter, box)
    check_ellipticity(parameter, box)
    logger.debug(f"Parametre noktası doğrulandı (n={parameter.n}, N={parameter.N})")
