"""
Yapılandırma Modülü
Süreç düzeyindeki varsayılan ayarlar (ortam değişkenleri bunları ezer)
"""

import os
from pathlib import Path

# Proje kök dizini
PROJECT_ROOT = Path(__file__).parent.absolute()

# Paralel iş parçacığı üst sınırı (çalışma üyeleri, sonda bataryaları)
THREADS = 1

# Log seviyesi ve opsiyonel log dosyası
LOG_LEVEL = os.environ.get("PDDE_LOG_LEVEL", "INFO")
LOG_FILE = os.environ.get("PDDE_LOG_FILE", "")

# Çıktı klasörü (--out verilmediğinde)
OUTPUT_DIR = str(PROJECT_ROOT / "runs")

