"""
Doğrulama Paketi: gronwall
sup_t ‖u(t)‖_{L_p} ≤ (Me^γ(1+n²K)exp(n²KMe^γ))^{⌈T⌉}‖u₀‖
"""

from typing import List

from ...core.registry import PluginMetadata
from ..analysis.verification import verify_gronwall
from ..dtos import CheckRecord
from .base_suite import VerificationSuite


class GronwallSuite(VerificationSuite):
    """Uydurulmuş (M, γ) ile Gronwall tahmini"""

    @classmethod
    def get_metadata(cls) -> PluginMetadata:
        return PluginMetadata(
            name="gronwall",
            description="L_p üstel büyüme sınırı",
            tags=frozenset({"estimate"}),
            priority=50,
        )

    def checks(self) -> List[CheckRecord]:
        ctx = self.context
        p = ctx.solver.p
        report = verify_gronwall(ctx.solve(), ctx.history, ctx.constants(p), p)
        return [CheckRecord.from_estimate(self.get_name(), report)]
