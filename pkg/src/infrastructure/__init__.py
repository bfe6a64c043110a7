"""
Infrastructure Layer
Dış sistemlerle etkileşim ve sayısal altyapı implementasyonları
"""

from .config import ConfigService, RunConfigLoader, config_hash
from .expressions import Expression, constant, parse_expr, shifted
from .io import ResultWriter, format_cell
from .logging import configure_logging, get_logger, setup_logger
from .numerics import DiscreteForm, EvolutionFamily, assemble_form

__all__ = [
    # Config
    "ConfigService",
    "RunConfigLoader",
    "config_hash",
    # Expressions
    "Expression",
    "constant",
    "parse_expr",
    "shifted",
    # IO
    "ResultWriter",
    "format_cell",
    # Logging
    "configure_logging",
    "get_logger",
    "setup_logger",
    # Numerics
    "DiscreteForm",
    "EvolutionFamily",
    "assemble_form",
]
