"""
Value Objects: seçim enum'ları
Sınır koşulu türü, zaman şeması, kuadratür ve adjoint modu.
"""

from enum import Enum


class _ParsableEnum(str, Enum):
    """Yapılandırma string'lerinden okunabilen enum tabanı"""

    @classmethod
    def parse(cls, raw: str):
        if isinstance(raw, cls):
            return raw
        token = str(raw).strip().lower().replace("-", "_").replace(" ", "_")
        for member in cls:
            if member.value == token:
                return member
        allowed = [m.value for m in cls]
        raise ValueError(f"Geçersiz {cls.__name__}: '{raw}'. Mevcut: {allowed}")


class BoundaryKind(_ParsableEnum):
    """Bileşen başına sınır koşulu türü"""
    DIRICHLET = "dirichlet"
    NEUMANN = "neumann"
    ROBIN = "robin"


class Scheme(_ParsableEnum):
    """θ-şeması"""
    CRANK_NICOLSON = "crank_nicolson"
    IMPLICIT_EULER = "implicit_euler"

    @property
    def theta(self) -> float:
        return 0.5 if self is Scheme.CRANK_NICOLSON else 1.0


class Quadrature(_ParsableEnum):
    """Duhamel integrali için zaman kuadratürü"""
    TRAPEZOID = "trapezoid"
    LEFT_RECTANGLE = "left_rectangle"


class AdjointMode(_ParsableEnum):
    """Adjoint propagatör gerçekleme biçimi"""
    TRANSPOSE = "transpose"
    REDISCRETIZE = "rediscretize"


class Provenance(_ParsableEnum):
    """Yörünge veya sayının kökeni"""
    PICARD = "picard"
    MARCHING = "marching"
    ORACLE = "oracle"
    MEASURED = "measured"
    THEORETICAL = "theoretical"
    FITTED = "fitted"
