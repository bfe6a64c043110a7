"""
IO Infrastructure
"""

from .csv_writer import ResultWriter, format_cell

__all__ = ["ResultWriter", "format_cell"]
