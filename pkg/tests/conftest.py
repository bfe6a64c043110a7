"""
Ortak test fixture'ları
Isı özmodu, n=2 bağlaşık gecikmeli kıyas sistemi ve küçük yardımcılar.
"""

import math
import sys
from pathlib import Path
from types import SimpleNamespace

import numpy as np
import pytest

# Proje kökünü path'e ekle
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.domain import (
    ComponentCoefficients,
    GridFunction,
    HistorySegment,
    ParameterPoint,
    SampleBox,
    SpatialGrid,
    TimeGrid,
)
from src.infrastructure.expressions import parse_expr
from src.infrastructure.numerics import EvolutionFamily


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: kabul ölçeğinde uzun süren testler")


def make_parameter(c0, c1, K_bound=1.0, bc="dirichlet", a="1", dim=1, alpha0=1.0, d0="0"):
    """Metin matrislerinden ParameterPoint; tüm bileşenler aynı yüksek mertebe katsayılara sahip"""
    n = len(c0)
    identity = [[a if i == j else "0" for j in range(dim)] for i in range(dim)]

    def component():
        return ComponentCoefficients(
            bc=bc,
            a=[[parse_expr(e) for e in row] for row in identity],
            a_first=[parse_expr("0")] * dim,
            b_first=[parse_expr("0")] * dim,
            d0=parse_expr(d0),
        )

    def matrix(rows):
        return [[parse_expr(str(e)) for e in row] for row in rows]

    return ParameterPoint(
        components=[component() for _ in range(n)],
        c0=matrix(c0),
        c1=matrix(c1),
        alpha0=alpha0,
        K_bound=K_bound,
    )


def sine_history(grid: SpatialGrid, n: int, dt: float, modes=None) -> HistorySegment:
    """head^k = sin(mode_k·x), geçmiş head'e eşit sabit"""
    modes = modes or [1] * n
    x = grid.coordinates["x1"]
    values = np.stack([np.sin(m * x) for m in modes])
    return HistorySegment.constant(GridFunction(grid, values), dt)


@pytest.fixture
def heat_setup():
    """D=(0,π), Dirichlet, a=1, u₀=sin; bağlaşım yok"""
    grid = SpatialGrid(((0.0, math.pi),), (200,))
    time_grid = TimeGrid(0.0, 1.0, 1e-3)
    parameter = make_parameter([[0]], [[0]])
    family = EvolutionFamily.for_parameter(parameter, grid, time_grid)
    return SimpleNamespace(
        grid=grid,
        time_grid=time_grid,
        parameter=parameter,
        family=family,
        history=sine_history(grid, 1, time_grid.dt),
    )


@pytest.fixture
def small_heat():
    """Hızlı testler için kaba ızgaralı ısı ailesi"""
    grid = SpatialGrid(((0.0, math.pi),), (32,))
    time_grid = TimeGrid(0.0, 2.0, 0.05)
    parameter = make_parameter([[0]], [[0]])
    family = EvolutionFamily.for_parameter(parameter, grid, time_grid)
    return SimpleNamespace(
        grid=grid,
        time_grid=time_grid,
        parameter=parameter,
        family=family,
        history=sine_history(grid, 1, time_grid.dt),
        box=SampleBox(grid, time_grid.times[::8]),
    )


BENCHMARK_C0 = [[-0.5, 0.3], [0.2, -0.4]]
BENCHMARK_C1 = [[0.4, 0.1], [0.1, 0.3]]


@pytest.fixture
def coupled_benchmark():
    """n=2 gecikmeli kıyas sistemi: (0,π), 64 hücre, dt=0.01, T=3, K=0.5"""
    grid = SpatialGrid(((0.0, math.pi),), (64,))
    time_grid = TimeGrid(0.0, 3.0, 0.01)
    parameter = make_parameter(BENCHMARK_C0, BENCHMARK_C1, K_bound=0.5)
    family = EvolutionFamily.for_parameter(parameter, grid, time_grid)
    return SimpleNamespace(
        grid=grid,
        time_grid=time_grid,
        parameter=parameter,
        family=family,
        history=sine_history(grid, 2, time_grid.dt, modes=[1, 2]),
        box=SampleBox(grid, time_grid.times[::50]),
    )


def heat_config(T=1.0, dt=0.05, cells=32, head="sin(x1)", extra=None):
    """Tek bileşenli ısı problemi için RunConfig sözlüğü"""
    raw = {
        "domain": {"extents": [[0.0, math.pi]], "cells": [cells]},
        "time": {"T": T, "dt": dt},
        "system": {
            "n": 1,
            "alpha0": 1.0,
            "K_bound": 1.0,
            "components": [{"bc": "dirichlet", "a": [["1"]]}],
            "c0": [["0"]],
            "c1": [["0"]],
        },
        "initial": {"head": [head]},
        "output": {"norms_q": ["2", "inf"]},
    }
    for key, value in (extra or {}).items():
        raw[key] = value
    return raw
