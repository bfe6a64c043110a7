"""
Duhamel İntegrali
∫_s^t U(t, ζ) f(ζ) dζ için düğüm düğüm özyinelemeler.

  yamuk:        S₀ = dt/2·f₀,  S_{j+1} = Φ_j S_j + dt·f_{j+1},  J_j = S_j − dt/2·f_j
  sol dikdörtgen: L₀ = 0,       L_{j+1} = Φ_j (L_j + dt·f_j)

Φ_j = U(t_{j+1}, t_j) tek adım operatörüdür.
"""

from typing import Optional

import numpy as np

from ...domain import GridFunction, GridMismatchError, IEvolutionFamily, Quadrature, ValidationError


def duhamel_trajectory(
    fam: IEvolutionFamily,
    f: np.ndarray,
    quadrature: Quadrature = Quadrature.TRAPEZOID,
    start: int = 0,
) -> np.ndarray:
    """
    f şekli (K+1, n, *hücreler), f[j] = f(t_{start+j}).
    Dönen J[j] ≈ ∫_{t_start}^{t_{start+j}} U(t_{start+j}, ζ) f(ζ) dζ; J[0] = 0.
    """
    quadrature = Quadrature.parse(quadrature)
    f = np.asarray(f, dtype=float)
    dt = fam.time_grid.dt
    result = np.zeros_like(f)

    if quadrature is Quadrature.TRAPEZOID:
        running = 0.5 * dt * f[0]
        for j in range(f.shape[0] - 1):
            running = fam.step(start + j, running) + dt * f[j + 1]
            result[j + 1] = running - 0.5 * dt * f[j + 1]
        return result

    running = np.zeros_like(f[0])
    for j in range(f.shape[0] - 1):
        running = fam.step(start + j, running + dt * f[j])
        result[j + 1] = running
    return result


def duhamel_integral(
    fam: IEvolutionFamily,
    t: float,
    f: np.ndarray,
    quadrature: Quadrature = Quadrature.TRAPEZOID,
    s: Optional[float] = None,
) -> GridFunction:
    """
    ∫_s^t U(t, ζ) f(ζ) dζ (s varsayılan olarak ailenin başlangıç zamanı).

    Raises:
        OffGridTimeError: t ızgarada değil
        GridMismatchError: f örnek sayısı [s, t] düğümleriyle uyumsuz
    """
    s = fam.time_grid.t0 if s is None else s
    start = fam.time_grid.index_of(s)
    end = fam.time_grid.index_of(t)
    if end < start:
        raise ValidationError(f"s ≤ t olmalıdır, alınan: s={s}, t={t}")
    f = np.asarray(f, dtype=float)
    expected = (end - start + 1, fam.n) + fam.grid.shape
    if f.shape != expected:
        raise GridMismatchError(f"f örnekleri uyumsuz: {f.shape}, beklenen {expected}")
    return GridFunction(fam.grid, duhamel_trajectory(fam, f, quadrature, start)[-1])
