"""
Presentation Layer
Kullanıcı arayüzü (pdde komut satırı)
"""

from .cli import create_parser, run_cli
from .formatters import ReportFormatter

__all__ = [
    "create_parser",
    "run_cli",
    "ReportFormatter",
]
