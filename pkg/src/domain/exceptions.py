"""
Domain Exceptions
Laboratuvara özgü hata tipleri - merkezi hata yönetimi
"""

from typing import Optional


class DomainException(Exception):
    """Domain katmanına özgü temel hata"""

    def __init__(self, message: str, details: Optional[str] = None):
        self.message = message
        self.details = details
        super().__init__(self.message)

    def __str__(self):
        if self.details:
            return f"{self.message} | Detay: {self.details}"
        return self.message


class ValidationError(DomainException):
    """Doğrulama hatası (ön koşul ihlali)"""
    pass


class AssumptionViolation(ValidationError):
    """
    DA1–DA5 varsayımlarından birinin ihlali.
    Mesaj her zaman ihlal edilen varsayımın etiketiyle başlar.
    """

    LABELS = {
        "DA1": "Boundary regularity",
        "DA2": "Essential boundedness of coefficients",
        "DA3": "Compactness",
        "DA4": "Ellipticity",
        "DA5": "Convergence of higher-order coefficients",
    }

    def __init__(self, assumption: str, message: str, details: Optional[str] = None):
        if assumption not in self.LABELS:
            raise ValueError(f"Bilinmeyen varsayım etiketi: {assumption}")
        self.assumption = assumption
        super().__init__(f"{assumption} ({self.LABELS[assumption]}): {message}", details)


class ExpressionSyntaxError(ValidationError):
    """Katsayı ifadesi sözdizimi hatası - konum bilgisi taşır"""

    def __init__(self, message: str, position: int, source: str = ""):
        self.position = position
        self.source = source
        super().__init__(f"{message} (konum {position})", source or None)


class UnknownIdentifierError(ExpressionSyntaxError):
    """İzin verilmeyen değişken veya fonksiyon adı"""
    pass


class GridMismatchError(ValidationError):
    """Farklı ızgaralarda ya da farklı bileşen sayısında fonksiyonlar"""
    pass


class OffGridTimeError(ValidationError):
    """Zaman ızgarasına düşmeyen zaman noktası"""
    pass


class ScheduleRequiredError(ValidationError):
    """N/2(1/p - 1/q) < 1/r' koşulu sağlanmıyor; regularization_schedule gerekli"""
    pass


class ConfigurationError(DomainException):
    """Yapılandırma hataları"""
    pass


class SolverError(DomainException):
    """Sayısal çözücü hataları (lineer çözüm, yakınsama)"""
    pass


class ConvergenceError(SolverError):
    """Picard iterasyonu yakınsamadı"""
    pass
