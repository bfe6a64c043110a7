"""
Use Case: solve
Mild çözümü hesaplar; norms.csv, isteğe bağlı snapshots.npz ve manifest.json yazar.
"""

import logging
import os
import time

from ...core.use_case_registry import UseCaseMetadata
from ...domain import Exponent, Provenance, lp_norms_over_time
from ..dtos import CommandResult, SolveRequest
from .base_use_case import EXIT_OK, BaseUseCase

logger = logging.getLogger(__name__)


class SolveUseCase(BaseUseCase[SolveRequest]):
    """Yapılandırılmış yöntemle (marching veya picard) çözüm"""

    @classmethod
    def get_metadata(cls) -> UseCaseMetadata:
        return UseCaseMetadata(
            name="solve",
            description="Mild çözüm ve zaman içinde L_q normları",
            priority=10,
        )

    def execute(self, request: SolveRequest) -> CommandResult:
        started = time.time()
        context = self.load_context(request.config_path)
        writer = self.require_writer()

        trajectory = context.solve()
        m = context.history.steps_per_delay
        states = trajectory.states[m:]
        times = trajectory.times[m:]
        exponents = [Exponent.parse(q) for q in context.output.norms_q]
        columns = [lp_norms_over_time(states, q, context.grid.cell_volume) for q in exponents]

        out_dir = self.output_dir(request.out_dir, context.config_hash[:12] or "run")
        header = ["t"] + [f"norm_q{q}" for q in exponents] + ["provenance"]
        rows = (
            [float(t)] + [float(column[j]) for column in columns] + [Provenance.MEASURED.value]
            for j, t in enumerate(times)
        )
        outputs = [writer.write_table(os.path.join(out_dir, "norms.csv"), header, rows)]

        if context.output.snapshots:
            outputs.append(writer.write_arrays(
                os.path.join(out_dir, "snapshots.npz"),
                {"times": trajectory.times, "states": trajectory.states},
            ))
        outputs.append(self.write_manifest(out_dir, context, started, outputs=outputs))

        final = ", ".join(f"‖u(T)‖_{q}={column[-1]:.6g}" for q, column in zip(exponents, columns))
        logger.info(f"Çözüm yazıldı: {out_dir} ({trajectory.provenance.value}, {len(times) - 1} adım)")
        return CommandResult(
            exit_code=EXIT_OK,
            outputs=outputs,
            summary=[
                f"Yöntem: {trajectory.provenance.value}",
                f"Adım: {len(times) - 1} (dt={context.time_grid.dt:g})",
                final,
            ],
        )
