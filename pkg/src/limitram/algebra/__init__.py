"""Exact scalars, t-jets, binary/ternary forms, parsing and Wronskians."""

from fractions import Fraction as Scalar

from .factor import ord_at, rational_roots, root_of_linear, squarefree_factor
from .forms import BinaryForm, ProjectivePoint, TernaryForm, proj_point
from .jets import TJet
from .parse import parse_form, parse_polynomial
from .wronskian import WronskianDivisor, wronskian_affine, wronskian_form

__all__ = [
    "Scalar", "TJet", "BinaryForm", "TernaryForm", "ProjectivePoint", "proj_point",
    "parse_form", "parse_polynomial", "squarefree_factor", "ord_at", "rational_roots",
    "root_of_linear", "WronskianDivisor", "wronskian_affine", "wronskian_form",
]
