"""Alternating subgroups of Coxeter and braid groups and alternating
subalgebras of Iwahori-Hecke algebras: exact coefficients, presentations,
rewriting and desk-scale verification."""

from .coeffs import a_one_param, a_vector, alpha_table
from .coxeter import CoxeterMatrix, load_matrix, named_matrix, validate_matrix
from .presentations import PRESENTATION_KINDS, present

__version__ = "0.1.0"

__all__ = [
    "CoxeterMatrix", "PRESENTATION_KINDS", "a_one_param", "a_vector", "alpha_table", "load_matrix",
    "named_matrix", "present", "validate_matrix",
]
