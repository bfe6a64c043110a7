"""
Yapılandırma Servisi
IConfigProvider implementasyonu
"""

import os
from pathlib import Path
from typing import Any, Optional
import logging

from ...domain import IConfigProvider, ConfigurationError

logger = logging.getLogger(__name__)


class ConfigService(IConfigProvider):
    """
    Merkezi yapılandırma servisi.
    Ortam değişkenlerinden okur, yoksa kök dizindeki config.py varsayılanlarına düşer.
    """

    def __init__(self, project_root: Path = None):
        self._project_root = project_root or Path(__file__).parents[3]
        self._defaults = None

    def _default(self, name: str, fallback: Any) -> Any:
        """Eski config.py modülünden varsayılan değer"""
        if self._defaults is None:
            try:
                import sys
                sys.path.insert(0, str(self._project_root))
                import config as defaults
                self._defaults = defaults
            except Exception:
                self._defaults = False
        if not self._defaults:
            return fallback
        return getattr(self._defaults, name, fallback)

    @property
    def threads(self) -> int:
        """Paralellik üst sınırı (PDDE_THREADS)"""
        raw = os.environ.get("PDDE_THREADS")
        if raw is None or raw.strip() == "":
            return int(self._default("THREADS", 1))
        try:
            value = int(raw)
        except ValueError as e:
            raise ConfigurationError(f"PDDE_THREADS tam sayı olmalıdır, alınan: {raw}") from e
        if value < 1:
            raise ConfigurationError(f"PDDE_THREADS en az 1 olmalıdır, alınan: {value}")
        return value

    @property
    def log_level(self) -> str:
        """Log seviyesi (PDDE_LOG_LEVEL)"""
        return os.environ.get("PDDE_LOG_LEVEL") or str(self._default("LOG_LEVEL", "INFO"))

    @property
    def log_file(self) -> Optional[str]:
        """Opsiyonel log dosyası (PDDE_LOG_FILE)"""
        return os.environ.get("PDDE_LOG_FILE") or self._default("LOG_FILE", "") or None

    @property
    def output_dir(self) -> str:
        """Varsayılan çıktı dizini (PDDE_OUTPUT_DIR)"""
        default_path = str(self._project_root / "runs")
        return os.environ.get("PDDE_OUTPUT_DIR") or str(self._default("OUTPUT_DIR", default_path))

    def validate(self) -> list:
        """Yapılandırmayı doğrula, hata listesi döndür"""
        errors = []

        try:
            _ = self.threads
        except ConfigurationError as e:
            errors.append(str(e))

        return errors
