"""Factorization of binary forms over Q and orders of vanishing."""

from fractions import Fraction

import sympy

from .forms import BinaryForm, ProjectivePoint, proj_point
from . import upoly

_U = sympy.Symbol("u")


def _sort_key(item):
    form, _ = item
    return (form.degree, form.coeffs)


def squarefree_factor(f):
    """Irreducible factors of a nonzero binary form with multiplicities.

    Factors are normalized (highest u-coefficient 1, so the factor at
    infinity is ``v``) and ordered by degree, then coefficients.  The product
    of the factors reproduces ``f`` up to a nonzero scalar.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero form")
    p = f.upoly()
    out = []
    at_infinity = f.degree - (len(p) - 1)
    if at_infinity:
        out.append((BinaryForm([1, 0], 1), at_infinity))  # the form v
    if len(p) > 1:
        expr = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p)],
                          _U, domain="QQ")
        _, factors = expr.factor_list()
        for fac, mult in factors:
            coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(fac.all_coeffs())]
            form = BinaryForm(coeffs, len(coeffs) - 1).normalized()
            out.append((form, int(mult)))
    return sorted(out, key=_sort_key)


def root_of_linear(form):
    """The point where a degree-1 form vanishes."""
    if form.degree != 1:
        raise ValueError("not a linear form")
    c0, c1 = form.coeffs  # c1*u + c0*v = 0  ->  (u:v) = (-c0 : c1)
    return proj_point(-c0, c1)


def ord_at(f, point):
    """Multiplicity of the linear factor vanishing at ``point`` in ``f``."""
    if f.is_zero():
        raise ValueError("order of vanishing of the zero form")
    if not isinstance(point, ProjectivePoint):
        point = proj_point(*point)
    if point.b == 0:
        return upoly.order_at_zero(f.upoly_at_infinity())
    return upoly.order_at_zero(upoly.taylor_shift(f.upoly(), point.a))


def rational_roots(f):
    """``{point: multiplicity}`` over the rational zeros of a nonzero form."""
    roots = {}
    for fac, mult in squarefree_factor(f):
        if fac.degree == 1:
            roots[root_of_linear(fac)] = mult
    return roots
