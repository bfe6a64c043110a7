"""
Sonuç Yazıcı
IResultWriter implementasyonu: CSV tabloları, JSON manifest ve npz düğüm arşivleri.
"""

import csv
import json
import math
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence
import logging

import numpy as np

from ...domain import IResultWriter

logger = logging.getLogger(__name__)


def format_cell(value: Any) -> str:
    """
    Sayılar repr ile (kayıpsız, '.' ondalık ayırıcı); ∞ için "inf".
    Aynı girdi her zaman aynı metni üretir.
    """
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return repr(value)
    return str(value)


def _jsonable(value: Any) -> Any:
    if isinstance(value, Mapping):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else str(value)
    return value


class ResultWriter(IResultWriter):
    """Dosya sistemi yazıcısı; üst klasörleri gerektiğinde oluşturur"""

    @staticmethod
    def _prepare(path: str) -> Path:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        return target

    def write_table(self, path: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        target = self._prepare(path)
        count = 0
        with target.open("w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(list(header))
            for row in rows:
                writer.writerow([format_cell(v) for v in row])
                count += 1
        logger.info(f"Tablo yazıldı: {target} ({count} satır)")
        return str(target)

    def write_manifest(self, path: str, manifest: Mapping[str, Any]) -> str:
        target = self._prepare(path)
        target.write_text(json.dumps(_jsonable(manifest), indent=2, sort_keys=True) + "\n", encoding="utf-8")
        logger.debug(f"Manifest yazıldı: {target}")
        return str(target)

    def write_arrays(self, path: str, arrays: Mapping[str, np.ndarray]) -> str:
        target = self._prepare(path)
        with target.open("wb") as handle:
            np.savez_compressed(handle, **{k: np.asarray(v) for k, v in arrays.items()})
        logger.info(f"Anlık görüntüler yazıldı: {target}")
        return str(target)
