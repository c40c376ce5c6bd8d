"""Exact lattice computations for Arnold's strange duality."""

__version__ = "0.1.0"
