"""Exact lattice algorithms for simplices and simplicial cones.

Unimodular cone decomposition, integer programs over shifted cones, lattice
width of simplices and optimization over the non-vertex lattice points of a
lattice simplex.  All arithmetic is over int and Fraction.
"""

from .cone_ip import ConeIpInstance, ConeIpResult, solve as solve_cone_ip
from .cones import Cone, HSimplex, ShiftedCone, VSimplex, cone_contains, normal_cone
from .decomposition import UnimodularDecomposition, decompose
from .errors import (BudgetExceeded, InputError, InvariantError, ParseError,
                     PreconditionError)
from .io import InstanceFile, emit, parse
from .linalg import det, hnf, minor_stats, snf
from .simplex_opt import PuncturedSimplexInstance, optimize_punctured
from .width import WidthResult, width, width_lattice_free

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "Cone", "ConeIpInstance", "ConeIpResult", "HSimplex", "InputError",
    "InstanceFile", "InvariantError", "ParseError", "PreconditionError",
    "PuncturedSimplexInstance", "ShiftedCone", "UnimodularDecomposition", "VSimplex",
    "WidthResult", "cone_contains", "decompose", "det", "emit", "hnf", "minor_stats",
    "normal_cone", "optimize_punctured", "parse", "snf", "solve_cone_ip", "width",
    "width_lattice_free",
]
