"""Hypergeometric-type functions on quadratic and q-quadratic lattices and their recurrences."""

from .errors import *  # noqa: F401,F403
from .lattice import Lattice, LatticeKind, q_number, structural_constants, x, x_k
from .hypergeo import HypergeoEquation
from .phi import PhiSpec, phi, y_nu
from .engine import RelationTriple, RecurrenceRelation, solve_relation, verify_relation
from .catalog import CATALOG, catalog_coeffs
from .families import make_dual_hahn, make_q_racah, make_racah, eval_ttrr

__version__ = "0.1.0"
