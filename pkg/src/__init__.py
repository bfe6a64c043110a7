"""
Src Package
Gecikmeli bağlaşık parabolik sistemler için mild çözüm laboratuvarı
"""

__version__ = "1.0.0"

__all__ = ["__version__"]
