"""Schubert calculus on classical flag manifolds.

Double Schubert polynomials of types A, B, C and D built from nilCoxeter
algebra products, theta and eta polynomials, transition trees, splitting
coefficients and Chern class formulas for degeneracy loci.
"""
from __future__ import annotations

__version__ = "0.1.0"

from .weyl import BOX, SignedPermutation, ValidationError, parse_perm  # noqa: E402
from .shapes import Shape, parse_shape  # noqa: E402
from .mpoly import MPoly  # noqa: E402
from .nilcox import FidelityError, double_schubert, stanley_function  # noqa: E402
from .polyring import eta_poly, theta_poly  # noqa: E402
from .formal import eta_formal, theta_formal  # noqa: E402
from .transition import stanley_coeffs, transition_tree  # noqa: E402
from .schubops import divided_difference, geometrize, ideal_equal  # noqa: E402
from .split import SplitProblem, split_coefficients, split_formula  # noqa: E402
from .locus import emit_locus, evaluate_locus, rank_conditions  # noqa: E402

__all__ = [
    "BOX",
    "SignedPermutation",
    "ValidationError",
    "parse_perm",
    "Shape",
    "parse_shape",
    "MPoly",
    "FidelityError",
    "double_schubert",
    "stanley_function",
    "theta_poly",
    "eta_poly",
    "theta_formal",
    "eta_formal",
    "stanley_coeffs",
    "transition_tree",
    "divided_difference",
    "geometrize",
    "ideal_equal",
    "SplitProblem",
    "split_coefficients",
    "split_formula",
    "emit_locus",
    "evaluate_locus",
    "rank_conditions",
]
