"""
İlerleme Bildirimi
Uzun süren hesapların (Picard süpürmeleri, çalışma üyeleri, kontroller)
olaylarını log'a yazar.
"""

import logging
import time

from ...domain import (
    CheckCompletedEvent,
    IProgressNotifier,
    MuAdjustedEvent,
    PicardSweepEvent,
    StudyMemberEvent,
)

logger = logging.getLogger(__name__)


class LoggingProgressNotifier(IProgressNotifier):
    """
    Olayları logging üzerinden bildiren servis.
    Süpürme ayrıntıları debug, üye ve kontrol sonuçları info seviyesindedir.
    """

    def __init__(self):
        self.start_time = time.time()
        self.sweeps = 0
        self.members = 0
        self.failed_checks = 0

    @property
    def elapsed_seconds(self) -> float:
        return time.time() - self.start_time

    def notify_sweep(self, event: PicardSweepEvent) -> None:
        self.sweeps += 1
        ratio = "-" if event.ratio is None else f"{event.ratio:.4f}"
        logger.debug(
            f"Picard #{event.iteration}: d_μ={event.distance:.3e}, "
            f"sup={event.sup_increment:.3e}, oran={ratio}, μ={event.mu:.4g}"
        )

    def notify_mu_adjusted(self, event: MuAdjustedEvent) -> None:
        logger.warning(f"μ güncellendi: {event.previous_mu:.4g} → {event.new_mu:.4g} ({event.reason})")

    def notify_member(self, event: StudyMemberEvent) -> None:
        self.members += 1
        logger.info(f"Çalışma üyesi {event.index + 1}/{event.total}: m={event.m}, hata={event.error:.4e}")

    def notify_check(self, event: CheckCompletedEvent) -> None:
        if not event.passed:
            self.failed_checks += 1
        status = "GEÇTİ" if event.passed else "KALDI"
        log = logger.info if event.passed else logger.warning
        log(f"[{event.suite}] {event.check}: {status} (pay={event.margin:.3e})")


class SilentProgressNotifier(IProgressNotifier):
    """Hiçbir şey bildirmeyen notifier (testler ve iç çözümler için)"""

    def notify_sweep(self, event: PicardSweepEvent) -> None:
        pass

    def notify_mu_adjusted(self, event: MuAdjustedEvent) -> None:
        pass

    def notify_member(self, event: StudyMemberEvent) -> None:
        pass

    def notify_check(self, event: CheckCompletedEvent) -> None:
        pass
