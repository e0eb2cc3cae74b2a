"""Invariants of simple Hamiltonian manifolds: exact Poincare-polynomial
constraints, Duistermaat-Heckman class lines, and polygon-space bending flows."""

from . import bending, dhline, polyalg, polygon, simpleham
from .errors import HamEdgeError

__version__ = "0.1.0"

__all__ = ["bending", "dhline", "polyalg", "polygon", "simpleham", "HamEdgeError", "__version__"]
