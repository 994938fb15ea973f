"""Braided Casimir elements of gl_n, their shifted determinants and
characteristic polynomials, with exact verification of the Capelli and
Yangian identities that relate them."""

__version__ = "0.1.0"

from .central import (
    CentralPolynomial,
    HCImagePoly,
    braided_casimir,
    charpoly_interpolate,
    gl2_hc_formula,
    shifted_determinant,
)
from .irreps import DominantWeight, Representation, build_rep, dual_star, gl2_rep, irrep
from .noncomm import UEAMatrix, UPoly, alpha, column_det, tridiag_det
from .pbw import UEAElement, hc_image, is_central, parse_element

__all__ = [
    "CentralPolynomial",
    "DominantWeight",
    "HCImagePoly",
    "Representation",
    "UEAElement",
    "UEAMatrix",
    "UPoly",
    "alpha",
    "braided_casimir",
    "build_rep",
    "charpoly_interpolate",
    "column_det",
    "dual_star",
    "gl2_hc_formula",
    "gl2_rep",
    "hc_image",
    "irrep",
    "is_central",
    "parse_element",
    "shifted_determinant",
    "tridiag_det",
]
