"""
Top-level package for latmed: finite lattices, medians on covering graphs
and the c1-median property.
"""

__author__ = """latmed developers"""
__version__ = '0.1.0'


from .lat import parse, convert, loads, dumps
from .models import Lattice, Profile


__all__ = ["parse", "convert", "loads", "dumps", "Lattice", "Profile"]
