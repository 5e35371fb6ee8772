"""Wronskian divisors of linear systems on the projective line (char 0)."""

from dataclasses import dataclass, field

from ..errors import LinearDependenceError
from . import upoly
from .factor import root_of_linear, squarefree_factor
from .forms import BinaryForm, ProjectivePoint, proj_point


@dataclass(frozen=True)
class WronskianDivisor:
    """Zeros of the intrinsic Wronskian of r+1 forms of degree e.

    Rational zeros live in ``points``; irreducible factors of degree >= 2
    in ``factors``.  ``degree`` is always (r+1)e - r(r+1).
    """

    points: dict = field(default_factory=dict)
    factors: tuple = ()
    degree: int = 0

    def weight_at(self, point):
        return self.points.get(point, 0)

    def total(self):
        return sum(self.points.values()) + sum(f.degree * m for f, m in self.factors)


def _bareiss_det(matrix):
    """Fraction-free determinant of a square matrix of univariate polynomials."""
    m = [[list(p) for p in row] for row in matrix]
    n = len(m)
    sign = 1
    prev = [1]
    for k in range(n - 1):
        pivot = next((i for i in range(k, n) if upoly.trim(m[i][k])), None)
        if pivot is None:
            return []
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = upoly.sub(upoly.mul(m[k][k], m[i][j]), upoly.mul(m[i][k], m[k][j]))
                m[i][j] = upoly.divexact(num, prev)
        prev = m[k][k]
    det = upoly.trim(m[n - 1][n - 1])
    return upoly.scale(det, sign)


def wronskian_determinant(polys):
    """det[d^a/du^a p_b] for univariate polynomials p_0..p_r."""
    rows = []
    current = [list(p) for p in polys]
    for _ in range(len(polys)):
        rows.append(current)
        current = [upoly.derivative(p) for p in current]
    return _bareiss_det(rows)


def wronskian_affine(forms):
    """Divisor of the Wronskian of ``forms`` on P^1.

    The determinant is taken in the chart v = 1; the point (1:0) is
    handled by recomputing in the chart u = 1.
    """
    forms = list(forms)
    if not forms:
        raise ValueError("need at least one form")
    e = forms[0].degree
    if any(f.degree != e for f in forms):
        raise ValueError("forms must share a degree")
    r = len(forms) - 1
    if r > e:
        raise LinearDependenceError(f"{r + 1} forms of degree {e} are always dependent")
    expected = (r + 1) * e - r * (r + 1)

    w = wronskian_determinant([f.upoly() for f in forms])
    if not w:
        raise LinearDependenceError("Wronskian vanishes identically: forms are dependent")
    w_inf = wronskian_determinant([f.upoly_at_infinity() for f in forms])
    inf_weight = upoly.order_at_zero(w_inf)
    affine_degree = len(w) - 1
    if affine_degree + inf_weight != expected:
        raise ArithmeticError("Wronskian charts disagree on the degree")

    points, factors = {}, []
    if affine_degree > 0:
        for fac, mult in squarefree_factor(BinaryForm.from_upoly(w, affine_degree)):
            if fac.degree == 1:
                points[root_of_linear(fac)] = mult
            else:
                factors.append((fac, mult))
    if inf_weight:
        points[proj_point(1, 0)] = inf_weight
    return WronskianDivisor(dict(sorted(points.items())), tuple(factors), expected)


def wronskian_form(forms):
    """The Wronskian as a binary form of degree (r+1)(e-r), up to sign."""
    forms = list(forms)
    e, r = forms[0].degree, len(forms) - 1
    w = wronskian_determinant([f.upoly() for f in forms])
    return BinaryForm.from_upoly(w, (r + 1) * (e - r))


__all__ = ["WronskianDivisor", "wronskian_affine", "wronskian_form", "wronskian_determinant",
           "ProjectivePoint"]
