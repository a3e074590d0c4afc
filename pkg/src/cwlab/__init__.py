"""Clique-width, rank-width and edge contraction: constructions and exact solvers."""

__version__ = "0.1.0"
