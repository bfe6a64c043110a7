"""
Use Case: study
Weak-* sürekli bağımlılık çalışması; study.csv ve manifest.json yazar.
Eğilim kriteri sağlanmazsa çıkış kodu 4.
"""

import logging
import os
import time

from ...core.use_case_registry import UseCaseMetadata
from ...domain import ConfigurationError, Provenance
from ..analysis.study import weakstar_study
from ..dtos import CheckRecord, CommandResult, StudyRequest
from .base_use_case import EXIT_CHECK_FAILED, EXIT_OK, BaseUseCase

logger = logging.getLogger(__name__)


class StudyUseCase(BaseUseCase[StudyRequest]):
    """Salınımlı c₀/c₁ dizileri için hata eğilimi"""

    @classmethod
    def get_metadata(cls) -> UseCaseMetadata:
        return UseCaseMetadata(
            name="study",
            description="Weak-* salınımlı katsayılarla pencere hatası eğilimi",
            priority=40,
        )

    def execute(self, request: StudyRequest) -> CommandResult:
        started = time.time()
        context = self.load_context(request.config_path)
        if context.study is None:
            raise ConfigurationError("Yapılandırmada 'study' bölümü yok")
        settings = context.study
        writer = self.require_writer()

        mu = context.mu() if settings.solver == "picard" else None
        study = weakstar_study(
            context.parameter,
            lambda point: context.build_family(point),
            context.history,
            settings,
            box=context.box,
            quadrature=context.solver.quadrature,
            threads=context.threads,
            picard=context.solver.picard,
            mu=mu,
            notifier=context.notifier,
        )

        out_dir = self.output_dir(request.out_dir, context.config_hash[:12] or "run")
        rows = ([m, float(err), Provenance.MEASURED.value] for m, err in study.rows())
        outputs = [writer.write_table(os.path.join(out_dir, "study.csv"), ("m", "err", "provenance"), rows)]

        verdict = CheckRecord(
            suite="study",
            check="weakstar_trend",
            theoretical=settings.final_ratio,
            measured=study.errors[-1] / study.errors[0] if study.errors[0] > 0 else 0.0,
            passed=study.passed,
        )
        outputs.append(self.write_manifest(out_dir, context, started, checks=[verdict], outputs=outputs))

        return CommandResult(
            exit_code=EXIT_OK if study.passed else EXIT_CHECK_FAILED,
            outputs=outputs,
            checks=[verdict],
            summary=[
                f"Varyant: {study.variant}, mod: {study.mode}, amp: {study.amp:g}",
                f"Pencere: [{study.window[0]:g}, {study.window[1]:g}], q={study.q}",
                f"Eğilim: {'geçti' if study.passed else 'kaldı'}",
            ],
        )
