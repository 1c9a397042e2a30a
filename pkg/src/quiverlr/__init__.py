"""Quiver coefficients, double Schubert polynomials and Stanley
symmetric functions in exact integer arithmetic."""

from .quiver import RankConditions, compute_P, expected_codim, rectangle_diagram, validate
from .schubert import Permutation, assemble_schubert, quiver_coefficients, rank_conditions_of
from .schur import SchurElement, TensorElement
from .stanley import stanley_function

__all__ = [
    "Permutation",
    "RankConditions",
    "SchurElement",
    "TensorElement",
    "assemble_schubert",
    "compute_P",
    "expected_codim",
    "quiver_coefficients",
    "rank_conditions_of",
    "rectangle_diagram",
    "stanley_function",
    "validate",
]
