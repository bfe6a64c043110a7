"""
Domain Value Objects
"""

from .exponent import Exponent
from .choices import BoundaryKind, Scheme, Quadrature, AdjointMode, Provenance

__all__ = ["Exponent", "BoundaryKind", "Scheme", "Quadrature", "AdjointMode", "Provenance"]
