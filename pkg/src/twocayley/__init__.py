"""Exact tools for 2-Cayley digraphs and their L-shaped minimum distance diagrams."""

from .digraph import AbelianGroup2, CayleyDigraph2, Element
from .lshape import LShape

__all__ = ["AbelianGroup2", "CayleyDigraph2", "Element", "LShape"]
__version__ = "0.1.0"
