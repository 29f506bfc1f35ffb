"""Decide and construct (a,b)-feasible partitions of multigraphs.

A partition ``(X, Y)`` of the vertices is (a,b)-feasible when every
``x`` in ``X`` has at least ``a(x)`` edges into ``X`` and every ``y`` in
``Y`` at least ``b(y)`` edges into ``Y``.
"""
from ._backend import BACKEND
from .multigraph import DegreeSpec, Instance, Multigraph
from .partition import Partition
from .solver import SolveOptions, SolveReport, solve, validate

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DegreeSpec",
    "Instance",
    "Multigraph",
    "Partition",
    "SolveOptions",
    "SolveReport",
    "solve",
    "validate",
]
