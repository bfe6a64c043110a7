"""
Verification Suite Tests
SuiteRegistry keşfi ve paketlerin küçük bir ısı bağlamında çalışması
"""

import math

import pytest

from src.application.context import RunContext
from src.application.dtos import CheckRecord, EstimateSettings, SolverSettings
from src.application.suites import VerificationSuite
from src.core import SuiteRegistry, get_suite_registry
from src.domain import AdjointMode, ConfigurationError, Provenance, SampleBox, Scheme, SpatialGrid, TimeGrid
from src.infrastructure.numerics import EvolutionFamily
from tests.conftest import BENCHMARK_C0, BENCHMARK_C1, make_parameter, sine_history


def context_for(parameter, grid, base_grid, history, **kwargs) -> RunContext:
    """Verilen ızgaralarda kurucu ile birlikte RunContext"""
    def builder(point, scheme=None, time_grid=None, adjoint_mode=None):
        return EvolutionFamily.for_parameter(
            point,
            grid,
            time_grid or base_grid,
            scheme or Scheme.CRANK_NICOLSON,
            adjoint_mode or AdjointMode.TRANSPOSE,
        )

    return RunContext(
        parameter=parameter,
        family=builder(parameter),
        history=history,
        box=SampleBox(grid, base_grid.times),
        builder=builder,
        **kwargs,
    )


@pytest.fixture
def coupled_context():
    """n=2 gecikmeli sistem, kaba ızgara: (0,π), 16 hücre, dt=0.05, T=2"""
    grid = SpatialGrid(((0.0, math.pi),), (16,))
    time_grid = TimeGrid(0.0, 2.0, 0.05)
    parameter = make_parameter(BENCHMARK_C0, BENCHMARK_C1, K_bound=0.5)
    return context_for(parameter, grid, time_grid, sine_history(grid, 2, time_grid.dt, modes=[1, 2]))


@pytest.fixture
def heat_context(small_heat):
    def builder(parameter, scheme=None, time_grid=None, adjoint_mode=None):
        return EvolutionFamily.for_parameter(
            parameter,
            small_heat.grid,
            time_grid or small_heat.time_grid,
            scheme or Scheme.CRANK_NICOLSON,
            adjoint_mode or AdjointMode.TRANSPOSE,
        )

    return RunContext(
        parameter=small_heat.parameter,
        family=small_heat.family,
        history=small_heat.history,
        box=small_heat.box,
        builder=builder,
    )


class TestSuiteRegistry:
    """Otomatik keşif"""

    def setup_method(self):
        SuiteRegistry.reset()

    def teardown_method(self):
        SuiteRegistry.reset()

    def test_discovers_all_suites(self):
        registry = get_suite_registry()
        registry.discover()

        assert set(registry.list_plugins()) == {
            "cocycle", "duality", "picard", "oracles", "gronwall", "smoothing",
        }

    def test_priority_order(self):
        """Propagatör paketleri önce listelenir"""
        registry = get_suite_registry()
        registry.discover()

        assert registry.list_plugins()[:2] == ["cocycle", "duality"]

    def test_unknown_suite(self):
        registry = get_suite_registry()
        registry.discover()

        with pytest.raises(KeyError):
            registry.get("yok")


class TestPropagatorSuites:
    """cocycle ve duality paketleri"""

    def test_cocycle_suite_passes(self, heat_context):
        registry = get_suite_registry()
        registry.ensure_discovered()
        records = registry.get("cocycle", context=heat_context).run()

        names = {r.check for r in records}
        assert {"cocycle_identity", "cocycle_composition_p2", "comparison_principle"} <= names
        assert all(r.passed for r in records)
        assert all(r.suite == "cocycle" for r in records)

    def test_duality_suite_passes(self, heat_context):
        registry = get_suite_registry()
        registry.ensure_discovered()
        records = registry.get("duality", context=heat_context).run()

        assert [r.check for r in records] == ["duality_transpose", "duality_rediscretize"]
        assert all(r.passed for r in records)


class TestMildSuites:
    """picard ve gronwall paketleri bağlaşık gecikmeli sistemde"""

    def test_picard_suite_passes(self, coupled_context):
        """Daralma oranı ≤ 2n²KMe^{γT}/μ + 0.05 ve süpürme sayısı sınırı"""
        registry = get_suite_registry()
        registry.ensure_discovered()
        records = {r.check: r for r in registry.get("picard", context=coupled_context).run()}

        assert {
            "contraction_ratio", "iteration_count", "picard_vs_marching", "uniqueness_double_mu",
            "integral_residual", "p_independence_p1", "p_independence_pinf", "linearity", "translation",
        } <= set(records)
        assert records["contraction_ratio"].theoretical == pytest.approx(0.55)
        assert records["iteration_count"].theoretical == math.ceil(math.log(1e-10) / math.log(0.55)) + 2
        assert all(r.passed for r in records.values())

    def test_picard_uses_auto_mu(self, coupled_context):
        """μ = 4n²KMe^{γT} uydurulmuş (M, γ) = (1, 0) ile"""
        solution = coupled_context.picard()

        assert solution.mu == pytest.approx(8.0, rel=1e-6)
        assert max(solution.ratios) <= 0.55

    def test_gronwall_suite_passes(self, coupled_context):
        registry = get_suite_registry()
        registry.ensure_discovered()
        records = registry.get("gronwall", context=coupled_context).run()

        assert len(records) == 1
        assert records[0].passed
        assert records[0].provenance is Provenance.THEORETICAL


class TestOracleSuite:
    """Isı + gecikme özmod sistemi: tek parça kehanet, Richardson ve adımlar yöntemi"""

    def test_all_oracles_agree(self):
        grid = SpatialGrid(((0.0, math.pi),), (128,))
        time_grid = TimeGrid(0.0, 3.0, 0.01)
        parameter = make_parameter([[0]], [["0.5"]])
        context = context_for(parameter, grid, time_grid, sine_history(grid, 1, time_grid.dt))

        registry = get_suite_registry()
        registry.ensure_discovered()
        records = {r.check: r for r in registry.get("oracles", context=context).run()}

        assert set(records) == {"monolithic_vs_marching", "richardson_decay", "method_of_steps"}
        assert all(r.passed for r in records.values())
        assert records["richardson_decay"].measured == pytest.approx(0.5, abs=0.1)


class TestSmoothingSuite:
    """Isı çekirdeği eğimi ve M̄ sınırı"""

    def test_slope_and_bound(self, heat_setup):
        time_grid = TimeGrid(0.0, 0.2, 1e-3)
        settings = SolverSettings(estimate=EstimateSettings(samples=2, power_iterations=5))
        context = context_for(heat_setup.parameter, heat_setup.grid, time_grid, heat_setup.history, solver=settings)

        registry = get_suite_registry()
        registry.ensure_discovered()
        records = registry.get("smoothing", context=context).run()

        assert [r.check for r in records][0] == "smoothing_slope"
        assert len(records) == 2
        assert all(r.passed for r in records)


class TestRunContext:
    """RunContext önbellekleri"""

    def test_marching_solution_cached(self, heat_context):
        first = heat_context.solve("marching")

        assert heat_context.solve("marching") is first
        assert first.provenance is Provenance.MARCHING

    def test_K_sampled(self, heat_context):
        assert heat_context.K == 0.0
        assert heat_context.resolved_constants() == {"K": 0.0}

    def test_build_family_without_builder(self, small_heat):
        context = RunContext(
            parameter=small_heat.parameter,
            family=small_heat.family,
            history=small_heat.history,
            box=small_heat.box,
        )

        with pytest.raises(ConfigurationError):
            context.build_family(scheme=Scheme.IMPLICIT_EULER)

    def test_constant_history_resampled(self, heat_context):
        """Sabit geçmiş kurucu olmadan yeni dt ile örneklenir"""
        resampled = heat_context.build_history(0.1)

        assert resampled.steps_per_delay == 10


class TestCheckRecord:
    """CheckRecord yardımcıları"""

    def test_at_most(self):
        record = CheckRecord.at_most("cocycle", "identity", 0.5, 1.0)

        assert record.passed
        assert record.margin == pytest.approx(0.5)

    def test_failed_is_a_finding(self):
        record = CheckRecord.at_most("picard", "ratio", 2.0, 1.0)

        assert not record.passed
        assert record.margin < 0


class TestSuiteBase:
    """VerificationSuite sözleşmesi"""

    def test_abstract(self):
        with pytest.raises(TypeError):
            VerificationSuite(None)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
