#!/usr/bin/env python3
"""
pdde: gecikmeli parabolik sistemler laboratuvarı
Ana çalıştırıcı dosya

Kullanım:
    python -m src.main solve --config run.json --out runs/heat
    python -m src.main verify --suite cocycle --config run.json
    python -m src.main schedule --N 1 --r0 2
    python -m src.main study --config study.json --out runs/study
"""

import sys
from pathlib import Path
from typing import Optional, Sequence

# Proje kökünü path'e ekle
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.presentation import run_cli


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Ana fonksiyon; çıkış kodunu döndürür"""
    try:
        return run_cli(argv)
    except KeyboardInterrupt:
        print("\nİptal edildi.", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())
