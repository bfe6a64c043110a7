"""
Doğrulama Paketleri
SuiteRegistry bu paketteki VerificationSuite alt sınıflarını otomatik keşfeder.
"""

from .base_suite import VerificationSuite

__all__ = ["VerificationSuite"]
