"""Binary forms in (u, v), ternary forms in (x, y, z) with t-jet coefficients,
and rational points of the projective line."""

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd, lcm

from ..errors import PrecisionExhausted
from . import upoly
from .jets import TJet, _min_prec


@total_ordering
@dataclass(frozen=True)
class ProjectivePoint:
    """A rational point (a:b) of P^1, stored as (a/b : 1) or (1 : 0)."""

    a: Fraction
    b: Fraction

    def __lt__(self, other):
        # affine points first, ordered by coordinate; infinity last
        return (self.b == 0, self.a) < (other.b == 0, other.a)

    def integers(self):
        """Primitive integer representative."""
        if self.b == 0:
            return (1, 0)
        den = self.a.denominator
        return (self.a.numerator, den)

    def __str__(self):
        p, q = self.integers()
        return f"({p}:{q})"


def proj_point(a, b):
    a, b = Fraction(a), Fraction(b)
    if b != 0:
        return ProjectivePoint(a / b, Fraction(1))
    if a == 0:
        raise ValueError("(0:0) is not a projective point")
    return ProjectivePoint(Fraction(1), Fraction(0))


class BinaryForm:
    """Homogeneous polynomial of a recorded degree in (u, v).

    ``coeffs[k]`` is the coefficient of ``u**k * v**(degree - k)``.
    """

    __slots__ = ("coeffs", "degree")

    def __init__(self, coeffs, degree=None):
        coeffs = [Fraction(c) for c in coeffs]
        if degree is None:
            degree = len(coeffs) - 1
        if degree < 0:
            # zero section of a negative-degree bundle: only the tag survives
            if any(coeffs):
                raise ValueError("a nonzero binary form needs a nonnegative degree")
            self.coeffs = ()
            self.degree = degree
            return
        if len(coeffs) > degree + 1:
            if any(coeffs[degree + 1:]):
                raise ValueError(f"coefficients exceed degree {degree}")
            coeffs = coeffs[:degree + 1]
        coeffs += [Fraction(0)] * (degree + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.degree = degree

    @classmethod
    def zero(cls, degree):
        return cls([], degree)

    @classmethod
    def from_upoly(cls, p, degree):
        p = upoly.trim(p)
        if len(p) - 1 > degree:
            raise ValueError("polynomial degree exceeds form degree")
        return cls(p, degree)

    @classmethod
    def linear_vanishing_at(cls, point):
        """The form b*u - a*v, vanishing exactly at (a:b)."""
        return cls([-point.a, point.b], 1)

    def upoly(self):
        """Dehomogenization in the chart v = 1."""
        return upoly.trim(self.coeffs)

    def upoly_at_infinity(self):
        """Dehomogenization in the chart u = 1, as a polynomial in v."""
        return upoly.trim(self.coeffs[::-1])

    def is_zero(self):
        return not any(self.coeffs)

    def _check(self, other):
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other):
        self._check(other)
        return BinaryForm([a + b for a, b in zip(self.coeffs, other.coeffs)], self.degree)

    def __sub__(self, other):
        self._check(other)
        return BinaryForm([a - b for a, b in zip(self.coeffs, other.coeffs)], self.degree)

    def __neg__(self):
        return BinaryForm([-a for a in self.coeffs], self.degree)

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            return BinaryForm(upoly.mul(self.coeffs, other.coeffs), self.degree + other.degree)
        c = Fraction(other)
        return BinaryForm([c * a for a in self.coeffs], self.degree)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = BinaryForm([1], 0)
        for _ in range(n):
            out = out * self
        return out

    def divexact(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by the zero form")
        if self.is_zero():
            return BinaryForm.zero(self.degree - other.degree)
        quot = upoly.divexact(self.coeffs, other.coeffs)
        return BinaryForm.from_upoly(quot, self.degree - other.degree)

    def evaluate(self, a, b):
        a, b = Fraction(a), Fraction(b)
        return sum((c * a**k * b**(self.degree - k) for k, c in enumerate(self.coeffs)),
                   Fraction(0))

    def normalized(self):
        """Scalar multiple whose highest nonzero u-coefficient is 1."""
        for c in reversed(self.coeffs):
            if c:
                return self * (1 / c)
        return self

    def __eq__(self, other):
        return (isinstance(other, BinaryForm) and self.degree == other.degree
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.coeffs, self.degree))

    def __repr__(self):
        return f"BinaryForm({self.format()!r}, degree={self.degree})"

    def format(self, names=("u", "v")):
        u, v = names
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c:
                terms.append(_format_term(c, ((u, k), (v, self.degree - k))))
        return _join_terms(terms)

    __str__ = format


def _format_term(c, powers):
    mono = "*".join(name if e == 1 else f"{name}^{e}" for name, e in powers if e)
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def _join_terms(terms):
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


class TernaryForm:
    """Form of degree ``degree`` in (x, y, z) whose coefficients are t-jets.

    Stored flat: ``terms[(tpow, ex, ey, ez)] = coefficient`` with ``tpow``
    possibly negative; everything at or beyond ``t**prec`` is unknown.
    """

    __slots__ = ("terms", "degree", "prec")

    def __init__(self, terms, degree, prec=None):
        clean = {}
        for key, c in terms.items():
            if prec is not None and key[0] >= prec:
                continue
            if c:
                if key[1] + key[2] + key[3] != degree:
                    raise ValueError(f"monomial {key[1:]} is not of degree {degree}")
                clean[key] = Fraction(c)
        self.terms = clean
        self.degree = degree
        self.prec = prec

    @classmethod
    def zero(cls, degree, prec=None):
        return cls({}, degree, prec)

    @classmethod
    def from_jets(cls, jets, degree):
        """Build from ``{(ex, ey, ez): TJet}``."""
        terms, precs = {}, []
        for mono, jet in jets.items():
            precs.append(jet.prec)
            for e, c in jet.terms.items():
                terms[(e,) + tuple(mono)] = c
        return cls(terms, degree, _min_prec(*precs))

    def jets(self):
        out = {}
        for (e, *mono), c in self.terms.items():
            out.setdefault(tuple(mono), {})[e] = c
        return {m: TJet(t, self.prec) for m, t in out.items()}

    def coefficient(self, mono):
        return self.jets().get(tuple(mono), TJet({}, self.prec))

    def is_t_free(self):
        return self.prec is None and all(k[0] == 0 for k in self.terms)

    def is_zero(self):
        return not self.terms

    def t_valuation(self):
        """Smallest t-exponent present; ``prec`` if nothing is known to be nonzero."""
        if self.terms:
            return min(k[0] for k in self.terms)
        return self.prec

    def _check(self, other):
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TernaryForm(out, self.degree, _min_prec(self.prec, other.prec))

    def __neg__(self):
        return TernaryForm({k: -c for k, c in self.terms.items()}, self.degree, self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TJet):
            other = TernaryForm({(e, 0, 0, 0): c for e, c in other.terms.items()}, 0, other.prec)
        if not isinstance(other, TernaryForm):
            c = Fraction(other)
            return TernaryForm({k: c * a for k, a in self.terms.items()}, self.degree, self.prec)
        precs = []
        if self.prec is not None:
            v = other.t_valuation()
            precs.append(None if v is None else self.prec + v)
        if other.prec is not None:
            v = self.t_valuation()
            precs.append(None if v is None else other.prec + v)
        prec = _min_prec(*precs)
        out = {}
        for (e1, a1, b1, c1), x1 in self.terms.items():
            for (e2, a2, b2, c2), x2 in other.terms.items():
                if prec is not None and e1 + e2 >= prec:
                    continue
                key = (e1 + e2, a1 + a2, b1 + b2, c1 + c2)
                out[key] = out.get(key, 0) + x1 * x2
        return TernaryForm(out, self.degree + other.degree, prec)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = TernaryForm({(0, 0, 0, 0): 1}, 0)
        for _ in range(n):
            out = out * self
        return out

    def shift_t(self, sh):
        """Multiply by t**sh."""
        prec = None if self.prec is None else self.prec + sh
        return TernaryForm({(k[0] + sh,) + k[1:]: c for k, c in self.terms.items()},
                           self.degree, prec)

    def truncate(self, prec):
        if self.prec is not None:
            prec = min(prec, self.prec)
        return TernaryForm(self.terms, self.degree, prec)

    def t_slice(self, k):
        """The t-free form multiplying t**k."""
        if self.prec is not None and k >= self.prec:
            raise PrecisionExhausted(f"t^{k} coefficient needed, precision is {self.prec}",
                                     lower_bound=self.prec)
        return TernaryForm({(0,) + tuple(m): c for (e, *m), c in self.terms.items() if e == k},
                           self.degree)

    def _powers(self):
        return {k[1:] for k in self.terms}

    def pullback(self, phi):
        """Substitute (x, y, z) = phi(u, v) into a t-free form."""
        if any(k[0] != 0 for k in self.terms):
            raise ValueError("pullback needs a t-free form")
        e = phi[0].degree
        if self.is_zero():
            return BinaryForm.zero(e * self.degree)
        cache = [{0: [1]} for _ in range(3)]

        def power(idx, n):
            table = cache[idx]
            if n not in table:
                table[n] = upoly.mul(power(idx, n - 1), phi[idx].coeffs)
            return table[n]

        pair_cache = {}
        acc = [Fraction(0)] * (e * self.degree + 1)
        for (_, a, b, c), coeff in self.terms.items():
            xy = pair_cache.get((a, b))
            if xy is None:
                xy = pair_cache[(a, b)] = upoly.mul(power(0, a), power(1, b))
            prod = upoly.mul(xy, power(2, c))
            for i, val in enumerate(prod):
                acc[i] += coeff * val
        return BinaryForm(acc, e * self.degree)

    def divexact(self, q):
        """Exact quotient by a t-free form; ``ArithmeticError`` if q does not divide."""
        if not self.is_t_free() or not q.is_t_free():
            raise ValueError("exact division is for t-free forms")
        if q.is_zero():
            raise ZeroDivisionError("division by the zero form")
        rem = dict(self.terms)
        lead = max(q.terms)
        lc = q.terms[lead]
        quot = {}
        while rem:
            top = max(rem)
            shift = tuple(a - b for a, b in zip(top, lead))
            if min(shift) < 0:
                raise ArithmeticError("form is not divisible")
            f = rem[top] / lc
            quot[shift] = f
            for k, c in q.terms.items():
                key = tuple(a + b for a, b in zip(k, shift))
                val = rem.get(key, 0) - f * c
                if val:
                    rem[key] = val
                else:
                    rem.pop(key, None)
        return TernaryForm(quot, self.degree - q.degree)

    def evaluate(self, point):
        """Value of a t-free form at a rational plane point."""
        x, y, z = (Fraction(c) for c in point)
        return sum((c * x**a * y**b * z**cz for (_, a, b, cz), c in self.terms.items()),
                   Fraction(0))

    def derivative(self, var):
        """Partial derivative in x, y or z (index 0, 1, 2) of a t-free form."""
        out = {}
        for key, c in self.terms.items():
            e = key[1 + var]
            if e:
                new = list(key)
                new[1 + var] -= 1
                out[tuple(new)] = c * e
        return TernaryForm(out, self.degree - 1)

    def __eq__(self, other):
        return (isinstance(other, TernaryForm) and self.degree == other.degree
                and self.prec == other.prec and self.terms == other.terms)

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.degree, self.prec))

    def __repr__(self):
        return f"TernaryForm({self.format()!r}, degree={self.degree})"

    def format(self):
        terms = []
        for key in sorted(self.terms, key=lambda k: (k[0], tuple(-e for e in k[1:]))):
            e, a, b, c = key
            terms.append(_format_term(self.terms[key], (("t", e), ("x", a), ("y", b), ("z", c))))
        out = _join_terms(terms)
        if self.prec is not None:
            out += f"+O(t^{self.prec})"
        return out

    __str__ = format


def integer_content_scale(coeffs):
    """Positive rational c making c*coeffs primitive integers (first nonzero positive)."""
    coeffs = [Fraction(c) for c in coeffs]
    nz = [c for c in coeffs if c]
    if not nz:
        return Fraction(1)
    den = lcm(*(c.denominator for c in nz))
    nums = [int(c * den) for c in nz]
    g = 0
    for n in nums:
        g = gcd(g, n)
    return Fraction(den, g) * (1 if nz[0] > 0 else -1)


def fraction_str(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
