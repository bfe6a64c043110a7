"""
Merkezi Loglama Modülü
Tüm modüller için tek noktadan loglama yapılandırması.
Konsol çıktısı stderr'e yazılır; stdout raporlara ayrılmıştır.
"""

import logging
import sys
from pathlib import Path
from typing import Optional, Union

from ...domain.interfaces import IConfigProvider


# Log formatları
CONSOLE_FORMAT = "%(asctime)s │ %(levelname)-8s │ %(name)s │ %(message)s"
FILE_FORMAT = "%(asctime)s - %(levelname)s - %(name)s - %(funcName)s:%(lineno)d - %(message)s"
DATE_FORMAT = "%H:%M:%S"

# Kendi DEBUG çıktısı paket loglarını boğan kütüphaneler
QUIET_LIBRARIES = ("lark",)


def _resolve_level(level: Union[int, str]) -> int:
    """'debug', 'INFO', 10 → sayısal seviye; tanınmayan ad INFO olur"""
    if isinstance(level, int):
        return level
    resolved = logging.getLevelName(str(level).upper())
    return resolved if isinstance(resolved, int) else logging.INFO


def _handler(handler: logging.Handler, level: int, formatter: logging.Formatter) -> logging.Handler:
    handler.setLevel(level)
    handler.setFormatter(formatter)
    return handler


def setup_logger(
    name: str,
    level: Union[int, str] = logging.INFO,
    log_file: Optional[Union[str, Path]] = None,
) -> logging.Logger:
    """
    Logger oluştur ve yapılandır. Handler'ları olan logger'a dokunulmaz.
    """
    logger = logging.getLogger(name)
    if logger.handlers:
        return logger

    numeric_level = _resolve_level(level)
    logger.setLevel(numeric_level)
    logger.addHandler(_handler(
        logging.StreamHandler(sys.stderr),
        numeric_level,
        logging.Formatter(CONSOLE_FORMAT, DATE_FORMAT),
    ))

    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        logger.addHandler(_handler(
            logging.FileHandler(log_path, encoding="utf-8"),
            numeric_level,
            logging.Formatter(FILE_FORMAT),
        ))

    return logger


def configure_logging(config: IConfigProvider, root: str = "src") -> logging.Logger:
    """
    PDDE_LOG_LEVEL / PDDE_LOG_FILE ile paket kök logger'ını kur.
    numpy/scipy RuntimeWarning'leri de (py.warnings) aynı hedeflere yazılır.
    """
    logging.captureWarnings(True)
    for name in QUIET_LIBRARIES:
        logging.getLogger(name).setLevel(logging.WARNING)
    setup_logger("py.warnings", logging.WARNING, config.log_file)
    return setup_logger(root, config.log_level, config.log_file)


def get_logger(name: str) -> logging.Logger:
    """Mevcut veya yeni logger al."""
    return setup_logger(name)
