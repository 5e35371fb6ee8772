"""Saturated lattices of sections and associated extensions.

For a twist n, the lattice V_n consists of the elements of V (over the
Laurent field in t) that are regular sections of O(k) + sum n_j C_j on the
total space.  Lattice columns are coefficient vectors with respect to the
fixed basis of V.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .algebra import linalg
from .algebra.forms import TernaryForm
from .algebra.jets import TJet
from .errors import IterationBoundExceeded, PreconditionError
from .fibre import canonical_twist, multidegree, normalize_twist, restrict_section


@dataclass(frozen=True)
class LatticeBasis:
    """An R-basis of V_n; ``columns[b][a]`` is the coefficient of basis form a."""

    twist: tuple
    columns: tuple
    basis: tuple

    @property
    def rank(self):
        return len(self.columns)

    @property
    def matrix(self):
        """Rows indexed by basis forms, columns by lattice generators."""
        return tuple(tuple(col[a] for col in self.columns) for a in range(len(self.basis)))

    @cached_property
    def elements(self):
        return tuple(combine(self.basis, col) for col in self.columns)


@dataclass(frozen=True)
class LimitSystem:
    twist: tuple
    degrees: tuple
    restrictions: tuple  # restrictions[i][b]: BinaryForm of degree degrees[i]
    injective: tuple
    zero: tuple

    def on(self, i):
        return self.restrictions[i]


@dataclass(frozen=True)
class ExtensionRecord:
    component: int
    twist: tuple  # canonical representative
    lattice: LatticeBasis
    limit: LimitSystem
    start: tuple
    steps: int


def combine(basis, coeffs):
    """sum_a coeffs[a] * basis[a] as a ternary form with t-coefficients."""
    out = None
    for form, c in zip(basis, coeffs):
        if c.is_zero() and c.prec is None:
            continue
        term = form * c
        out = term if out is None else out + term
    if out is None:
        deg = basis[0].degree if basis else 0
        prec = min((c.prec for c in coeffs if c.prec is not None), default=None)
        return TernaryForm({}, deg, prec)
    return out


def _restrictions(model, elements, n):
    return tuple(tuple(restrict_section(model, e, n, i) for e in elements)
                 for i in range(model.t))


def _coeff_rows(restr):
    """Linear equations (one per binary-form coefficient) in the column weights."""
    rows = []
    for forms in restr:
        width = max((len(f.coeffs) for f in forms), default=0)
        for idx in range(width):
            rows.append([f.coeffs[idx] if idx < len(f.coeffs) else Fraction(0) for f in forms])
    return rows


def _rank_of(forms):
    rows = [list(f.coeffs) for f in forms if f.coeffs]
    return linalg.rank(rows) if rows else 0


def saturate_lattice(model, n, start=None, max_rounds=None):
    """R-basis of V ∩ H^0(C, O(k) + sum n_j C_j).

    Begins with t^c times the basis (c large enough to clear every pole)
    or with the columns of ``start``, which must already be sections.
    Whenever a rational combination of columns restricts to zero on the
    whole special fibre, it is divided by t.
    """
    n = tuple(n)
    if len(n) != model.t:
        raise ValueError(f"twist has {len(n)} entries, the model has {model.t} components")
    basis = model.basis_jets()
    size = len(basis)
    if start is None:
        c = max(0, max(-x for x in n))
        columns = [tuple(TJet.monomial(c) if a == b else TJet() for a in range(size))
                   for b in range(size)]
    else:
        columns = [tuple(col) for col in start]
    bound = max_rounds if max_rounds is not None else model.precision + 1
    for _ in range(bound + 1):
        elements = [combine(basis, col) for col in columns]
        rows = _coeff_rows(_restrictions(model, elements, n))
        kernel = linalg.nullspace(rows, len(columns)) if rows else linalg.nullspace([], len(columns))
        if not kernel:
            return LatticeBasis(n, tuple(columns), basis)
        for vec in kernel:
            free = next(b for b, x in enumerate(vec) if x == 1 and all(
                w[b] == 0 for w in kernel if w is not vec))
            new = []
            for a in range(size):
                acc = TJet()
                for b, lam in enumerate(vec):
                    if lam:
                        acc = acc + columns[b][a] * TJet.constant(lam)
                new.append(acc.shift(-1))
            columns[free] = tuple(new)
    raise IterationBoundExceeded(f"saturation at twist {n} did not stabilize in {bound} rounds")


def limit_from_lattice(model, lattice, n=None):
    n = tuple(lattice.twist if n is None else n)
    restr = _restrictions(model, lattice.elements, n)
    degrees = multidegree(model, n)
    ranks = [_rank_of(forms) for forms in restr]
    return LimitSystem(
        twist=n,
        degrees=degrees,
        restrictions=restr,
        injective=tuple(rk == lattice.rank for rk in ranks),
        zero=tuple(rk == 0 for rk in ranks),
    )


def limit_at_twist(model, n):
    """Restriction of the saturated lattice at twist n to each component."""
    return limit_from_lattice(model, saturate_lattice(model, n))


def _reduced_laplacian(model, i):
    keep = [j for j in range(model.t) if j != i]
    delta = model.intersection_matrix
    return keep, [[delta[a][b] for b in keep] for a in keep]


def _adjugate(m):
    size = len(m)
    if size == 1:
        return [[Fraction(1)]]
    adj = [[Fraction(0)] * size for _ in range(size)]
    for a in range(size):
        for b in range(size):
            minor = [row[:b] + row[b + 1:] for k, row in enumerate(m) if k != a]
            adj[b][a] = (-1) ** (a + b) * linalg.determinant(minor)
    return adj


def default_start(model, i):
    """A twist with n_i = 0 and negative degree on every other component.

    Solves L' n' = -|det L'| (k d' + 1) with L' the intersection matrix
    without row and column i; L' is negative definite for a connected
    dual graph, so the adjugate gives an integer solution.
    """
    if model.t == 1:
        return (0,)
    keep, lap = _reduced_laplacian(model, i)
    det = linalg.determinant(lap)
    if det == 0:
        raise PreconditionError("dual graph is disconnected")
    sign = -1 if det > 0 else 1
    adj = _adjugate(lap)
    rhs = [model.k * model.components[j].degree + 1 for j in keep]
    sol = [sign * sum(adj[a][b] * rhs[b] for b in range(len(keep))) for a in range(len(keep))]
    n = [0] * model.t
    for j, x in zip(keep, sol):
        assert x.denominator == 1
        n[j] = int(x)
    return tuple(n)


def is_admissible_start(model, i, n):
    degs = multidegree(model, n)
    return all(degs[j] < 0 for j in range(model.t) if j != i)


def associated_extension(model, i, start=None):
    """The extension whose limit injects on C_i and meets every C_j nontrivially.

    From a twist with negative degree off C_i, every component on which
    the whole limit system vanishes is twisted down by one, all at once.
    Such a twist does not change the lattice, so it is saturated only once.
    """
    n = normalize_twist(default_start(model, i) if start is None else tuple(start), i)
    if not is_admissible_start(model, i, n):
        raise PreconditionError(f"start twist {n} is not negative off {model.components[i].name}")
    lattice = saturate_lattice(model, n)
    bound = (model.r + 1) * model.k * model.degree * model.t + model.t
    for step in range(bound + 1):
        limit = limit_from_lattice(model, lattice, n)
        drop = [j for j in range(model.t) if j != i and limit.zero[j]]
        if not drop:
            if not limit.injective[i]:
                raise PreconditionError(
                    f"limit system at {n} is not injective on {model.components[i].name}")
            lattice = LatticeBasis(n, lattice.columns, lattice.basis)
            return ExtensionRecord(i, canonical_twist(n), lattice, limit,
                                   canonical_twist(start) if start is not None else
                                   canonical_twist(default_start(model, i)), step)
        n = tuple(x - 1 if j in drop else x for j, x in enumerate(n))
    raise IterationBoundExceeded(
        f"associated extension of {model.components[i].name} not reached in {bound} twists")


def associated_extensions(model):
    return tuple(associated_extension(model, i) for i in range(model.t))


def connecting_vector(ext_i, ext_j):
    """(l_im)_m: the twist taking L_j to L_i, normalized to vanish at i."""
    i = ext_i.component
    diff = tuple(a - b for a, b in zip(ext_i.twist, ext_j.twist))
    vec = normalize_twist(diff, i)
    j = ext_j.component
    if not all(0 <= x <= vec[j] for x in vec):
        raise AssertionError(f"connecting vector {vec} violates 0 <= l_im <= l_ij")
    return vec


def connecting_number(ext_i, ext_j):
    return connecting_vector(ext_i, ext_j)[ext_j.component]


def connecting_matrix(extensions):
    return tuple(tuple(connecting_number(a, b) for b in extensions) for a in extensions)


# ---------------------------------------------------------------------------
# membership (used by the brute-force saturation oracle)

def _jet_det(m):
    size = len(m)
    if size == 1:
        return m[0][0]
    out = TJet()
    for b in range(size):
        minor = [row[:b] + row[b + 1:] for row in m[1:]]
        term = m[0][b] * _jet_det(minor)
        out = out + term if b % 2 == 0 else out - term
    return out


def lattice_contains(lattice, coeffs):
    """Whether the coefficient vector lies in the R-span of the lattice columns (Cramer)."""
    cols = [list(c) for c in lattice.columns]
    base = _jet_det([[col[a] for col in cols] for a in range(len(cols))])
    v0 = base.valuation()
    for b in range(len(cols)):
        swapped = cols[:b] + [list(coeffs)] + cols[b + 1:]
        det = _jet_det([[col[a] for col in swapped] for a in range(len(cols))])
        if not det.is_zero() and det.valuation() < v0:
            return False
    return True


__all__ = ["LatticeBasis", "LimitSystem", "ExtensionRecord", "saturate_lattice",
           "limit_at_twist", "limit_from_lattice", "associated_extension",
           "associated_extensions", "default_start", "is_admissible_start",
           "connecting_vector", "connecting_number", "connecting_matrix", "combine",
           "lattice_contains"]
