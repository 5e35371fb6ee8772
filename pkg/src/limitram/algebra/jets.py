"""Truncated Laurent series in the deformation parameter t.

A ``TJet`` is known modulo ``t**prec`` (absolute precision); ``prec=None``
marks an exact Laurent polynomial.  Every operation propagates precision
honestly and never invents coefficients past it.
"""

from fractions import Fraction

from ..errors import PrecisionExhausted


def _min_prec(*precs):
    known = [p for p in precs if p is not None]
    return min(known) if known else None


class TJet:
    __slots__ = ("terms", "prec")

    def __init__(self, terms=None, prec=None):
        clean = {}
        for e, c in (terms or {}).items():
            if prec is not None and e >= prec:
                continue
            c = Fraction(c)
            if c:
                clean[int(e)] = c
        self.terms = clean
        self.prec = prec

    @classmethod
    def constant(cls, c, prec=None):
        return cls({0: c}, prec)

    @classmethod
    def monomial(cls, power, c=1, prec=None):
        return cls({power: c}, prec)

    def valuation(self):
        """Smallest exponent with a nonzero coefficient.

        Raises ``PrecisionExhausted`` when every known coefficient is zero
        but the jet is not exact; returns ``None`` for the exact zero.
        """
        if self.terms:
            return min(self.terms)
        if self.prec is None:
            return None
        raise PrecisionExhausted(f"jet is O(t^{self.prec})", lower_bound=self.prec)

    def is_zero(self):
        return not self.terms

    def coefficient(self, power):
        if self.prec is not None and power >= self.prec:
            raise PrecisionExhausted(f"coefficient of t^{power} beyond precision {self.prec}",
                                     lower_bound=self.prec)
        return self.terms.get(power, Fraction(0))

    def truncate(self, prec):
        prec = prec if self.prec is None else min(prec, self.prec)
        return TJet(self.terms, prec)

    def shift(self, k):
        """Multiply by t**k (k may be negative)."""
        prec = None if self.prec is None else self.prec + k
        return TJet({e + k: c for e, c in self.terms.items()}, prec)

    def __add__(self, other):
        if not isinstance(other, TJet):
            other = TJet.constant(other)
        prec = _min_prec(self.prec, other.prec)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return TJet(out, prec)

    __radd__ = __add__

    def __neg__(self):
        return TJet({e: -c for e, c in self.terms.items()}, self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TJet):
            c = Fraction(other)
            return TJet({e: c * a for e, a in self.terms.items()}, self.prec)
        precs = []
        # (a + O(t^A))(b + O(t^B)) is known modulo t^min(A + v(b), B + v(a))
        if self.prec is not None:
            vb = min(other.terms) if other.terms else other.prec
            precs.append(None if vb is None else self.prec + vb)
        if other.prec is not None:
            va = min(self.terms) if self.terms else self.prec
            precs.append(None if va is None else other.prec + va)
        prec = _min_prec(*precs)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return TJet(out, prec)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TJet):
            other = TJet.constant(other)
        return self.terms == other.terms and self.prec == other.prec

    def __hash__(self):
        return hash((tuple(sorted(self.terms.items())), self.prec))

    def __repr__(self):
        return f"TJet({self})"

    def __str__(self):
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e == 0:
                parts.append(str(c))
            else:
                mono = "t" if e == 1 else f"t^{e}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        if self.prec is not None:
            parts.append(f"O(t^{self.prec})")
        return " + ".join(parts) if parts else "0"
