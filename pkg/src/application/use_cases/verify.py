"""
Use Case: verify
Adı verilen doğrulama paketini çalıştırır, report.csv ve manifest.json yazar.
Herhangi bir kontrol başarısızsa çıkış kodu 4.
"""

import logging
import os
import time

from ...core.suite_registry import get_suite_registry
from ...core.use_case_registry import UseCaseMetadata
from ...domain import ValidationError
from ..dtos import CommandResult, VerifyRequest
from .base_use_case import EXIT_CHECK_FAILED, EXIT_OK, BaseUseCase

logger = logging.getLogger(__name__)


REPORT_HEADER = ("check", "theoretical", "measured", "margin", "pass", "provenance")


class VerifyUseCase(BaseUseCase[VerifyRequest]):
    """Doğrulama paketi çalıştırıcı"""

    @classmethod
    def get_metadata(cls) -> UseCaseMetadata:
        return UseCaseMetadata(
            name="verify",
            description="Değişmez ve tahmin doğrulama paketleri",
            priority=20,
        )

    def validate_request(self, request: VerifyRequest) -> None:
        registry = get_suite_registry()
        registry.ensure_discovered()
        if request.suite not in registry.list_plugins():
            raise ValidationError(
                f"Bilinmeyen doğrulama paketi: '{request.suite}'",
                f"Mevcut: {registry.list_plugins()}",
            )

    def execute(self, request: VerifyRequest) -> CommandResult:
        started = time.time()
        context = self.load_context(request.config_path)
        writer = self.require_writer()

        suite = get_suite_registry().get(request.suite, context=context)
        records = suite.run()

        out_dir = self.output_dir(request.out_dir, f"{request.suite}-{context.config_hash[:12] or 'run'}")
        rows = (
            [r.check, r.theoretical, r.measured, r.margin, str(r.passed).lower(), r.provenance.value]
            for r in records
        )
        outputs = [writer.write_table(os.path.join(out_dir, "report.csv"), REPORT_HEADER, rows)]
        outputs.append(self.write_manifest(out_dir, context, started, checks=records, outputs=outputs))

        failed = [r for r in records if not r.passed]
        for record in failed:
            logger.warning(
                f"Başarısız kontrol: {record.check} (ölçülen={record.measured:.6g}, sınır={record.theoretical:.6g})"
            )
        return CommandResult(
            exit_code=EXIT_CHECK_FAILED if failed else EXIT_OK,
            outputs=outputs,
            checks=list(records),
            summary=[f"Paket: {request.suite}", f"Geçen: {len(records) - len(failed)}/{len(records)}"],
        )
