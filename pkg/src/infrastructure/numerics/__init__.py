"""
Numerics Infrastructure
"""

from .assembly import DiscreteForm, assemble_form
from .evolution import EvolutionFamily

__all__ = ["DiscreteForm", "assemble_form", "EvolutionFamily"]
