"""Exact computation of degree-2 bracket word-map images on nilpotent Lie
algebras over odd prime fields, with the structural predictions that decide
w(L) = L' from dimension, class, center and breadth data."""

from .budgets import (BudgetExceededError, DEFAULT_ENUM_POINTS,
                      DEFAULT_IMAGE_POINTS, DEFAULT_ORACLE_PAIRS)
from .gfp import PrimeField
from .linalg import (Subspace, coefficient_grid, nullspace, rank, rref, span,
                     subspace_intersect, subspace_sum)
from .liecore import (CenterDerivedCheck, HeisenbergBasis, LieAlgebra,
                      StructureReport, bracket_span, central_product,
                      change_basis, check_z_cap_maximality, direct_sum,
                      heisenberg_normal_form, is_ideal, quotient, stem_reduce,
                      structure_report)
from .image import (CoverCertificate, ElementSet, ImageReport, SumDepthResult,
                    commuting_generating_quad, cover_certificate, image_report,
                    projective_points, sum_depth, word_image,
                    word_image_bruteforce)
from .classify import (BreadthClassification, BreadthProfile, TheoremVerdict,
                       breadth, breadth_profile, classify_breadth,
                       theorem_verdict)
from . import catalog

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError", "DEFAULT_ENUM_POINTS", "DEFAULT_IMAGE_POINTS",
    "DEFAULT_ORACLE_PAIRS", "PrimeField", "Subspace", "coefficient_grid",
    "nullspace", "rank", "rref", "span", "subspace_intersect", "subspace_sum",
    "CenterDerivedCheck", "HeisenbergBasis", "LieAlgebra", "StructureReport",
    "bracket_span", "central_product", "change_basis",
    "check_z_cap_maximality", "direct_sum", "heisenberg_normal_form",
    "is_ideal", "quotient", "stem_reduce", "structure_report",
    "CoverCertificate", "ElementSet", "ImageReport", "SumDepthResult",
    "commuting_generating_quad", "cover_certificate", "image_report",
    "projective_points", "sum_depth", "word_image", "word_image_bruteforce",
    "BreadthClassification", "BreadthProfile", "TheoremVerdict", "breadth",
    "breadth_profile", "classify_breadth", "theorem_verdict", "catalog",
    "__version__",
]
