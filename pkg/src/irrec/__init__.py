"""Exact computations for dessin enumeration and topological recursion on
rational spectral curves."""

__version__ = "0.1.0"
