"""
CLI Entry Point
`pdde` komut satırı: solve, verify, schedule, study alt komutları.
Loglar stderr'e, özet rapor stdout'a yazılır; dönüş değeri çıkış kodudur.
"""

import argparse
import logging
from typing import Callable, Dict, Optional, Sequence

from ..application.dtos import ScheduleRequest, SolveRequest, StudyRequest, VerifyRequest
from ..application.use_cases import EXIT_CONFIG
from ..container import Container, get_container
from ..core import get_suite_registry
from ..infrastructure.logging import configure_logging
from .formatters import ReportFormatter

logger = logging.getLogger(__name__)


# Alt komut → argparse Namespace'ten istek DTO'su
REQUEST_FACTORIES: Dict[str, Callable[[argparse.Namespace], object]] = {
    "solve": lambda args: SolveRequest(config_path=args.config, out_dir=args.out),
    "verify": lambda args: VerifyRequest(suite=args.suite, config_path=args.config, out_dir=args.out),
    "schedule": lambda args: ScheduleRequest(N=args.N, p=args.p, q=args.q, r0=args.r0),
    "study": lambda args: StudyRequest(config_path=args.config, out_dir=args.out),
}


def create_parser() -> argparse.ArgumentParser:
    """Alt komutlarıyla argparse parser'ı oluştur"""
    parser = argparse.ArgumentParser(
        prog="pdde",
        description="Gecikmeli parabolik sistemlerin mild çözümleri için sayısal laboratuvar",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    solve = subparsers.add_parser("solve", help="Yörüngeyi hesapla, norms.csv yaz")
    solve.add_argument("--config", required=True, help="RunConfig JSON dosyası")
    solve.add_argument("--out", required=True, help="Çıktı dizini")

    registry = get_suite_registry()
    registry.ensure_discovered()
    verify = subparsers.add_parser("verify", help="Doğrulama paketini çalıştır, report.csv yaz")
    verify.add_argument("--suite", required=True, help=f"Paket adı ({', '.join(registry.list_plugins())})")
    verify.add_argument("--config", required=True, help="RunConfig JSON dosyası")
    verify.add_argument("--out", default=None, help="Çıktı dizini (varsayılan: PDDE_OUTPUT_DIR)")

    schedule = subparsers.add_parser("schedule", help="m₀, Θ ve p-zincirini yazdır")
    schedule.add_argument("--N", type=int, required=True, help="Uzay boyutu")
    schedule.add_argument("--p", default="1", help="Başlangıç üssü (varsayılan: 1)")
    schedule.add_argument("--q", default="inf", help="Hedef üs (varsayılan: inf)")
    schedule.add_argument("--r0", default="inf", help="Geçmiş üssü r₀ > 1 (varsayılan: inf)")

    study = subparsers.add_parser("study", help="Weak-* sürekli bağımlılık çalışması, study.csv yaz")
    study.add_argument("--config", required=True, help="RunConfig JSON dosyası")
    study.add_argument("--out", required=True, help="Çıktı dizini")

    return parser


def run_cli(argv: Optional[Sequence[str]] = None, container: Optional[Container] = None) -> int:
    """
    Komut satırını çalıştır.

    Returns:
        Çıkış kodu (0 başarı, 2 yapılandırma, 3 çözücü, 4 başarısız kontrol)
    """
    container = container or get_container()
    args = create_parser().parse_args(argv)
    configure_logging(container.config)

    errors = container.config.validate()
    if errors:
        for error in errors:
            logger.error(f"Yapılandırma hatası: {error}")
        print(ReportFormatter.error(f"{args.command}: CONFIG (çıkış kodu {EXIT_CONFIG})", errors))
        return EXIT_CONFIG

    logger.info(f"pdde {args.command} başlatılıyor...")
    use_case = container.get_use_case(args.command)
    result = use_case.run(REQUEST_FACTORIES[args.command](args))
    print(ReportFormatter.command(args.command, result))
    return result.exit_code
