"""Planar degenerations G = q_1 ... q_t + t*h and their special fibre.

The total space is the zero locus of G in P^2 x Spec Q[[t]].  Its special
fibre has components C_i = {q_i = 0}, each given with a birational
parametrization phi_i : P^1 -> C_i.  Twists O(k) + sum n_i C_i are
integer vectors modulo the all-ones vector, since t cuts out the whole
special fibre.
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from itertools import combinations
import math
from math import gcd, lcm

import sympy

from .algebra import linalg, upoly
from .algebra.factor import ord_at
from .algebra.forms import BinaryForm, TernaryForm
from .errors import PrecisionExhausted, PreconditionError, ValidationError

_ONE = TernaryForm({(0, 0, 0, 0): 1}, 0)


@dataclass(frozen=True)
class ComponentSpec:
    name: str
    equation: TernaryForm
    parametrization: tuple
    self_nodes: tuple = ()

    @property
    def degree(self):
        return self.equation.degree

    @property
    def param_degree(self):
        return self.parametrization[0].degree

    @property
    def genus(self):
        """Arithmetic genus of a rational nodal component."""
        return len(self.self_nodes)

    def point(self, p):
        """Plane point phi(p) as a tuple of Fractions."""
        return tuple(f.evaluate(p.a, p.b) for f in self.parametrization)


@dataclass(frozen=True)
class Node:
    """A node, given by its two branches ``(component index, parameter point)``."""

    branches: tuple

    @property
    def is_self(self):
        return self.branches[0][0] == self.branches[1][0]

    def components(self):
        return (self.branches[0][0], self.branches[1][0])

    def branch_on(self, i):
        for comp, p in self.branches:
            if comp == i:
                return p
        raise KeyError(f"node does not lie on component {i}")

    def other(self, i):
        a, b = self.components()
        return b if a == i else a


def projectively_equal(p, q):
    return all(p[a] * q[b] == p[b] * q[a] for a in range(3) for b in range(3))


def normalize_plane_point(p):
    p = [Fraction(c) for c in p]
    for c in reversed(p):
        if c:
            return tuple(x / c for x in p)
    raise ValueError("(0:0:0) is not a plane point")


def plane_integers(p):
    """Primitive integer vector for a plane point, first nonzero entry positive."""
    p = [Fraction(c) for c in p]
    den = lcm(*(c.denominator for c in p))
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if next(c for c in ints if c) < 0:
        ints = [-c for c in ints]
    return tuple(ints)


@dataclass(frozen=True)
class FamilyModel:
    """Family G = prod(q_i) + t*h with a linear system V of degree-k forms.

    ``basis`` holds exact forms (they may involve t as a coefficient);
    the engine reads them modulo ``t**precision``.
    """

    components: tuple
    perturbation: TernaryForm
    nodes: tuple
    k: int
    basis: tuple
    precision: int = None

    def __post_init__(self):
        if self.precision is None:
            object.__setattr__(self, "precision", default_precision(self))

    def with_precision(self, precision):
        return replace(self, precision=precision)

    @property
    def t(self):
        return len(self.components)

    @property
    def r(self):
        return len(self.basis) - 1

    @property
    def degree(self):
        return sum(c.degree for c in self.components)

    @property
    def plane_genus(self):
        d = self.degree
        return (d - 1) * (d - 2) // 2

    def index(self, name):
        for i, c in enumerate(self.components):
            if c.name == name:
                return i
        raise KeyError(f"no component named {name!r}")

    @cached_property
    def self_nodes(self):
        return tuple(Node(((i, p), (i, q)))
                     for i, c in enumerate(self.components) for p, q in c.self_nodes)

    @cached_property
    def all_nodes(self):
        return tuple(self.nodes) + self.self_nodes

    @cached_property
    def intersection_matrix(self):
        t = self.t
        delta = [[0] * t for _ in range(t)]
        for node in self.nodes:
            i, j = node.components()
            delta[i][j] += 1
            delta[j][i] += 1
        for i in range(t):
            delta[i][i] = -sum(delta[i][j] for j in range(t) if j != i)
        assert all(sum(row) == 0 for row in delta)
        return tuple(tuple(row) for row in delta)

    @cached_property
    def others(self):
        """prod_{m != i} q_m for each i."""
        out = []
        for i in range(self.t):
            acc = _ONE
            for m, c in enumerate(self.components):
                if m != i:
                    acc = acc * c.equation
            out.append(acc)
        return tuple(out)

    def pulled(self, j, i):
        """q_j restricted to C_i, as a binary form on the parameter line."""
        return self._pulled[(j, i)]

    @cached_property
    def _pulled(self):
        return {(j, i): cj.equation.pullback(ci.parametrization)
                for i, ci in enumerate(self.components)
                for j, cj in enumerate(self.components)}

    @cached_property
    def pulled_h(self):
        return tuple(self.perturbation.pullback(c.parametrization) for c in self.components)

    @cached_property
    def pulled_others(self):
        return tuple(self.others[i].pullback(c.parametrization)
                     for i, c in enumerate(self.components))

    def q_power(self, j, e):
        cache = self.__dict__.setdefault("_qpow", {})
        key = (j, e)
        if key not in cache:
            cache[key] = self.components[j].equation ** e
        return cache[key]

    def basis_jets(self):
        """The basis forms read modulo t**precision."""
        return tuple(f.truncate(self.precision) for f in self.basis)

    def node_point(self, node):
        i, p = node.branches[0]
        return normalize_plane_point(self.components[i].point(p))


def default_precision(model):
    return 8 * (model.r + 1) * model.degree + 16


# ---------------------------------------------------------------------------
# validation

@dataclass
class ValidationReport:
    errors: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def valid(self):
        return not self.errors

    def raise_if_invalid(self):
        if self.errors:
            raise ValidationError(self.errors)


def _is_irreducible(form):
    x, y, z = sympy.symbols("x y z")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**a * y**b * z**cz
               for (_, a, b, cz), c in form.terms.items())
    _, factors = sympy.factor_list(sympy.expand(expr), x, y, z)
    return sum(m for _, m in factors) == 1


def _tangent(phi, p):
    """Derivative of phi at p in a direction transverse to the Euler field."""
    var = 0 if p.b != 0 else 1
    out = []
    for f in phi:
        if var == 0:
            d = BinaryForm([k * f.coeffs[k] for k in range(1, f.degree + 1)], f.degree - 1)
        else:
            d = BinaryForm([(f.degree - k) * f.coeffs[k] for k in range(f.degree)], f.degree - 1)
        out.append(d.evaluate(p.a, p.b))
    return out


def _pt(P):
    return "(" + ":".join(map(str, plane_integers(P))) + ")"


def validate_family(model):
    """Check every structural invariant; see ``ValidationReport``."""
    rep = ValidationReport()
    err, warn = rep.errors.append, rep.warnings.append
    comps = model.components
    d = model.degree
    names = [c.name for c in comps]
    if len(set(names)) != len(names):
        err(f"duplicate component names {names}")
    if not comps:
        err("no components")
        return rep

    for i, c in enumerate(comps):
        q = c.equation
        if not q.is_t_free():
            err(f"{c.name}: equation must have constant coefficients")
            continue
        if q.degree < 1 or q.is_zero():
            err(f"{c.name}: equation must be a nonzero form of positive degree")
            continue
        if not _is_irreducible(q):
            err(f"{c.name}: equation {q} is reducible over Q")
        phi = c.parametrization
        if len(phi) != 3 or len({f.degree for f in phi}) != 1:
            err(f"{c.name}: parametrization needs three forms of one degree")
            continue
        if c.param_degree != q.degree:
            err(f"{c.name}: parametrization degree {c.param_degree} != curve degree {q.degree}")
        g = []
        for f in phi:
            g = upoly.gcd(g, f.upoly())
        if len(g) > 1 or all(f.upoly_at_infinity()[:1] in ([], [0]) for f in phi):
            err(f"{c.name}: parametrization has a base point")
        if not q.pullback(phi).is_zero():
            err(f"{c.name}: equation does not vanish along its parametrization")
        expected = (q.degree - 1) * (q.degree - 2) // 2
        if len(c.self_nodes) != expected:
            err(f"{c.name}: {len(c.self_nodes)} self-nodes declared, a rational curve of "
                f"degree {q.degree} has {expected}")
    if rep.errors:
        return rep

    h = model.perturbation
    if not h.is_t_free() or h.degree != d:
        err(f"perturbation must be a constant-coefficient form of degree {d}")
    elif h.is_zero():
        err("perturbation h is zero")
    else:
        for i, c in enumerate(comps):
            if model.pulled_h[i].is_zero():
                err(f"perturbation vanishes identically on component {c.name}")

    plane_points = []
    for i, c in enumerate(comps):
        for p, q in c.self_nodes:
            if p == q:
                err(f"{c.name}: self-node branches coincide at {p}")
                continue
            P, Q = c.point(p), c.point(q)
            if not projectively_equal(P, Q):
                err(f"{c.name}: self-node branches {p}, {q} map to different points")
                continue
            if linalg.determinant([P, _tangent(c.parametrization, p),
                                   _tangent(c.parametrization, q)]) == 0:
                err(f"{c.name}: self-node at {_pt(P)} is not an ordinary node")
            for j, other in enumerate(comps):
                if j != i and other.equation.evaluate(P) == 0:
                    err(f"{c.name}: self-node at {_pt(P)} lies on {other.name}")
            plane_points.append(normalize_plane_point(P))

    counts = {}
    for node in model.nodes:
        (i, p), (j, q) = node.branches
        if i == j:
            err("inter-component node joins a component to itself; declare it as a self-node")
            continue
        ci, cj = comps[i], comps[j]
        P, Q = ci.point(p), cj.point(q)
        if not projectively_equal(P, Q):
            err(f"node {ci.name}{p} / {cj.name}{q}: branches map to different plane points")
            continue
        if (model.pulled(j, i).is_zero() or ord_at(model.pulled(j, i), p) != 1
                or ord_at(model.pulled(i, j), q) != 1):
            err(f"node at {_pt(P)} between {ci.name} and {cj.name} "
                f"is not a transversal intersection")
        plane_points.append(normalize_plane_point(P))
        key = (min(i, j), max(i, j))
        counts[key] = counts.get(key, 0) + 1
    if len(set(plane_points)) != len(plane_points):
        err("two declared nodes share a plane point")
    for i, j in combinations(range(len(comps)), 2):
        bezout = comps[i].degree * comps[j].degree
        if counts.get((i, j), 0) != bezout:
            err(f"{comps[i].name} and {comps[j].name} meet in {bezout} points, "
                f"{counts.get((i, j), 0)} nodes declared")
    if not _connected(len(comps), [n.components() for n in model.nodes]):
        err("special fibre is disconnected")

    if not rep.errors and not h.is_zero():
        for node in model.all_nodes:
            P = model.node_point(node)
            if h.evaluate(P) == 0:
                warn(f"h vanishes at the node {_pt(P)}: the total space is singular there; "
                     f"node weights follow the regular-case formula")

    _check_linear_system(model, err)
    return rep


def _connected(n, edges):
    seen, stack = {0}, [0]
    adj = {i: set() for i in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == n


def _monomials(k):
    return [(a, b, k - a - b) for a in range(k + 1) for b in range(k + 1 - a)]


def _check_linear_system(model, err):
    k = model.k
    if k < 0:
        err("linear system degree must be nonnegative")
        return
    if not model.basis:
        err("linear system basis is empty")
        return
    for f in model.basis:
        if f.degree != k:
            err(f"basis form {f} does not have degree {k}")
            return
        if f.terms and min(e for e, *_ in f.terms) < 0:
            err(f"basis form {f} has negative powers of t")
            return
    rows = list(model.basis)
    if k >= model.degree:
        G = model.perturbation.shift_t(1)
        prod = _ONE
        for c in model.components:
            prod = prod * c.equation
        G = G + prod
        for mono in _monomials(k - model.degree):
            rows.append(G * TernaryForm({(0,) + mono: 1}, sum(mono)))
    if not _independent_over_qt(rows, _monomials(k)):
        err("linear system basis is dependent modulo G")


def _independent_over_qt(forms, monos):
    """Linear independence over Q(t) of forms whose coefficients are polynomials in t.

    A maximal minor has t-degree at most len(forms) * (max t-degree), so full
    rank at one of that many + 1 values of t decides the question exactly.
    """
    top = max((e for f in forms for e, *_ in f.terms), default=0)
    for tau in range(len(forms) * top + 1):
        matrix = [[Fraction(0)] * len(monos) for _ in forms]
        index = {m: c for c, m in enumerate(monos)}
        for row, f in zip(matrix, forms):
            for (e, *m), c in f.terms.items():
                row[index[tuple(m)]] += c * Fraction(tau) ** e
        if linalg.rank(matrix) == len(forms):
            return True
    return False


# ---------------------------------------------------------------------------
# twist calculus

def canonical_twist(n):
    """Representative of n modulo the all-ones vector with minimum entry 0."""
    low = min(n)
    return tuple(x - low for x in n)


def normalize_twist(n, i):
    """Representative with entry i equal to 0."""
    return tuple(x - n[i] for x in n)


def same_twist_class(a, b):
    return canonical_twist(a) == canonical_twist(b)


def multidegree(model, n):
    """deg_{C_j} of O(k) + sum n_i C_i, for each j."""
    delta = model.intersection_matrix
    return tuple(model.k * c.degree + sum(n[i] * delta[i][j] for i in range(model.t))
                 for j, c in enumerate(model.components))


def decompose_twist(n, i):
    """Split n (mod all-ones) as E - F with E, F effective, disjoint and C_i-free."""
    m = normalize_twist(n, i)
    return tuple(max(x, 0) for x in m), tuple(max(-x, 0) for x in m)


# ---------------------------------------------------------------------------
# valuations and restrictions

def _descend(model, F, i):
    """One step of F/t along C_i, for F a t-polynomial whose t^0 part vanishes on C_i.

    Uses q_i = -t*h / prod_{m != i} q_m, so that F / t = F' / prod_{m != i} q_m.
    """
    comp = model.components[i]
    F0 = F.t_slice(0)
    F0q = F0.divexact(comp.equation) if not F0.is_zero() else None
    F1 = TernaryForm({k: c for k, c in F.terms.items() if k[0] != 0}, F.degree, F.prec).shift_t(-1)
    out = F1 * model.others[i]
    if F0q is not None:
        out = out - model.perturbation * F0q
    return out


def valuation(model, elem, i, t_power=0, q_powers=None, h_power=0, max_steps=None):
    """Order of vanishing of ``elem`` / (t^a prod q_j^b_j h^c) along C_i.

    Returns an int, ``math.inf`` for an exact zero, or raises
    ``PrecisionExhausted`` when the answer lies at or beyond the precision.
    """
    shift = 0
    if elem.terms and elem.t_valuation() < 0:
        shift = -elem.t_valuation()
        elem = elem.shift_t(shift)
    denom = t_power + (q_powers or {}).get(i, 0)
    F = elem
    steps = 0
    bound = max_steps if max_steps is not None else 64 + 4 * model.precision
    while True:
        if F.is_zero() and F.prec is None:
            return math.inf
        if F.prec is not None and F.prec <= 0:
            raise PrecisionExhausted(f"valuation along {model.components[i].name} is at least "
                                     f"{steps - shift - denom}", lower_bound=steps - shift - denom)
        F0 = F.t_slice(0)
        if not F0.is_zero() and not F0.pullback(model.components[i].parametrization).is_zero():
            return steps - shift - denom
        if steps >= bound:
            raise PrecisionExhausted("valuation step bound reached",
                                     lower_bound=steps - shift - denom)
        F = _descend(model, F, i)
        steps += 1


def restrict_section(model, elem, n, i):
    """Image of ``elem`` in H^0(C_i, (O(k) + sum n_j C_j)|C_i), pulled back to P^1.

    The section is trivialized near C_i by t^{n_i} prod_{j != i} q_j^{n_j - n_i};
    those q_j are local equations of C_j at every node on C_i, and t^{-1}
    is eliminated through q_i * prod_{m != i} q_m = -t*h.
    """
    comp = model.components[i]
    target = multidegree(model, n)[i]
    exps = {j: n[j] - n[i] for j in range(model.t) if j != i}
    v = elem.t_valuation() if elem.terms else None
    m = max(0, -(v + n[i])) if v is not None else 0
    keep = 1 - n[i]  # only t-exponents below this reach the t^0 part
    E = elem.truncate(keep) if elem.prec is None or elem.prec > keep else elem
    if E.prec is not None and E.prec + n[i] < 1:
        raise PrecisionExhausted(f"section known only modulo t^{E.prec}, restriction to "
                                 f"{comp.name} needs t^{1 - n[i]}", lower_bound=E.prec)
    num = E.shift_t(n[i] + m)
    den = BinaryForm([1], 0)
    for j, e in exps.items():
        if e > 0:
            num = num * model.q_power(j, e)
        elif e < 0:
            den = den * model.pulled(j, i) ** (-e)
    num = num.truncate(m + 1)
    for _ in range(m):
        F0 = num.t_slice(0)
        if not F0.is_zero() and not F0.pullback(comp.parametrization).is_zero():
            raise PreconditionError(f"element has a pole along {comp.name} at twist {tuple(n)}")
        num = _descend(model, num, i)
    R = num.t_slice(0).pullback(comp.parametrization)
    den = den * model.pulled_others[i] ** m
    if R.is_zero():
        return BinaryForm.zero(target)
    if target < 0:
        raise PreconditionError(f"nonzero restriction to {comp.name} at negative degree {target}")
    try:
        out = R.divexact(den)
    except ArithmeticError:
        raise PreconditionError(f"element is not a section at twist {tuple(n)}: "
                                f"pole at a node of {comp.name}") from None
    if out.degree != target:
        raise ValidationError(f"restriction degree {out.degree} != multidegree {target}; "
                              f"are all intersection points declared as nodes?")
    return out
