"""Limit ramification divisors.

Each component carries the ramification divisor of its associated limit
system; inter-component nodes get the weight w^i + w^j + (r - l_ij)(r + 1).
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import linalg, upoly
from .algebra.factor import root_of_linear, squarefree_factor
from .algebra.forms import BinaryForm, ProjectivePoint, proj_point
from .algebra.wronskian import wronskian_affine
from .errors import IdentityCheckError, LinearDependenceError, PreconditionError
from .lattice import associated_extensions, connecting_matrix
from .fibre import multidegree, plane_integers


@dataclass(frozen=True)
class WeightedPoint:
    """A piece of a divisor: a rational point, an irreducible factor, or a node.

    ``kind`` is "point" (component, param), "factor" (component, form),
    "node" (node) or "self_node" (node).
    """

    kind: str
    weight: int
    component: int = None
    param: ProjectivePoint = None
    form: BinaryForm = None
    node: object = None
    plane: tuple = None

    @property
    def degree(self):
        """Contribution to the total degree."""
        return self.weight * (self.form.degree if self.kind == "factor" else 1)


@dataclass(frozen=True)
class ComponentDivisor:
    component: int
    branch_weights: dict  # parameter point -> Wronskian weight (rational zeros)
    factors: tuple  # (irreducible form, multiplicity)
    entries: tuple  # WeightedPoints pushed to C_i, self-nodes merged
    degree: int
    expected_degree: int

    def weight_at(self, p):
        return self.branch_weights.get(p, 0)


def _beta(r):
    return r * (r + 1) // 2


def component_ram_divisor(model, rec):
    """Ramification divisor Z_i of the limit system associated to C_i."""
    i = rec.component
    if not rec.limit.injective[i]:
        raise PreconditionError(f"limit system is not injective on {model.components[i].name}")
    comp = model.components[i]
    r = model.r
    beta = _beta(r)
    deg_i = rec.limit.degrees[i]
    W = wronskian_affine(rec.limit.restrictions[i])
    branch = dict(W.points)
    selfs = set()
    for p, q in comp.self_nodes:
        selfs.update((p, q))
    entries = []
    for p, w in sorted(branch.items()):
        if p not in selfs:
            entries.append(WeightedPoint("point", w, component=i, param=p,
                                         plane=plane_integers(comp.point(p))))
    for fac, mult in W.factors:
        entries.append(WeightedPoint("factor", mult, component=i, form=fac))
    for node in model.self_nodes:
        if node.branches[0][0] != i:
            continue
        (_, p), (_, q) = node.branches
        w = branch.get(p, 0) + branch.get(q, 0) + 2 * beta
        entries.append(WeightedPoint("self_node", w, component=i, node=node,
                                     plane=plane_integers(comp.point(p))))
    degree = sum(e.degree for e in entries)
    expected = (r + 1) * deg_i + beta * (2 * comp.genus - 2)
    return ComponentDivisor(i, branch, W.factors, tuple(entries), degree, expected)


def _taylor_row(form, p):
    e = form.degree
    if p.b == 0:
        coeffs = form.upoly_at_infinity()
    else:
        coeffs = upoly.taylor_shift(form.upoly(), p.a)
    return [coeffs[k] if k < len(coeffs) else Fraction(0) for k in range(e + 1)]


def vanishing_sequence(forms, p):
    """Orders of vanishing at p of the sections of span(forms), increasing."""
    if not isinstance(p, ProjectivePoint):
        if isinstance(p, BinaryForm):
            raise PreconditionError("vanishing sequences are computed at rational points only")
        p = proj_point(*p)
    forms = list(forms)
    _, pivots = linalg.rref([_taylor_row(f, p) for f in forms])
    if len(pivots) != len(forms):
        raise LinearDependenceError("forms are linearly dependent")
    return tuple(pivots)


def ramification_weight(sequence):
    return sum(e - h for h, e in enumerate(sequence))


def node_weight(r, w_i, w_j, l_ij):
    w = w_i + w_j + (r - l_ij) * (r + 1)
    if w < 0:
        raise AssertionError(f"negative node weight {w}")
    return w


@dataclass(frozen=True)
class NodeCertificate:
    node: object
    eps_i: tuple
    eps_j: tuple
    l_ij: int
    outside: bool  # the node is not in Z
    prop6: bool


def node_certificate(model, node, ext_i, ext_j, l_ij):
    """Vanishing sequences on both branches of an inter-component node."""
    i, j = ext_i.component, ext_j.component
    eps_i = vanishing_sequence(ext_i.limit.restrictions[i], node.branch_on(i))
    eps_j = vanishing_sequence(ext_j.limit.restrictions[j], node.branch_on(j))
    r = model.r
    sums = [eps_i[h] + eps_j[r - h] for h in range(r + 1)]
    return NodeCertificate(node, eps_i, eps_j, l_ij,
                           outside=all(s == l_ij for s in sums),
                           prop6=all(s >= l_ij for s in sums))


def cor9_predicate(model, node, extensions, connecting=None):
    connecting = connecting or connecting_matrix(extensions)
    i, j = node.components()
    if i == j:
        raise PreconditionError("the criterion concerns nodes joining two components")
    return node_certificate(model, node, extensions[i], extensions[j], connecting[i][j])


@dataclass
class RamificationReport:
    model: object
    extensions: tuple
    connecting: tuple
    components: tuple  # ComponentDivisor per component
    node_weights: tuple  # (node, weight) for inter-component nodes
    certificates: tuple  # NodeCertificate per inter-component node
    entries: tuple  # assembled Z(s)
    checks: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def total_degree(self):
        return sum(e.degree for e in self.entries)

    @property
    def ok(self):
        return all(self.checks.values()) and all(self.details.get("consistency", {}).values())


def expected_global_degree(model):
    r, d = model.r, model.degree
    return (r + 1) * model.k * d + _beta(r) * (2 * model.plane_genus - 2)


def cor8_sides(model, extensions, connecting):
    """(sum of deg_{C_i} L_i, k*d + sum_{i<j} delta_ij l_ij)."""
    lhs = sum(ext.limit.degrees[ext.component] for ext in extensions)
    delta = model.intersection_matrix
    rhs = model.k * model.degree + sum(delta[i][j] * connecting[i][j]
                                       for i in range(model.t) for j in range(i + 1, model.t))
    return lhs, rhs


def limit_divisor(model, strict=True):
    """Assemble Z(s) and verify the degree identities; raises on failure if strict."""
    extensions = associated_extensions(model)
    connecting = connecting_matrix(extensions)
    divisors = tuple(component_ram_divisor(model, ext) for ext in extensions)
    r = model.r

    inter = set()
    for node in model.nodes:
        for comp, p in node.branches:
            inter.add((comp, p))
    entries = [e for div in divisors for e in div.entries
               if not (e.kind == "point" and (e.component, e.param) in inter)]
    weights, certs = [], []
    for node in model.nodes:
        i, j = node.components()
        w = node_weight(r, divisors[i].weight_at(node.branch_on(i)),
                        divisors[j].weight_at(node.branch_on(j)), connecting[i][j])
        weights.append((node, w))
        certs.append(node_certificate(model, node, extensions[i], extensions[j],
                                      connecting[i][j]))
        if w:
            entries.append(WeightedPoint("node", w, node=node,
                                         plane=plane_integers(model.node_point(node))))

    lhs, rhs = cor8_sides(model, extensions, connecting)
    total = sum(e.degree for e in entries)
    expected = expected_global_degree(model)
    report = RamificationReport(model, extensions, connecting, divisors, tuple(weights),
                                tuple(certs), tuple(entries))
    report.checks = {
        "cor8": lhs == rhs,
        "global_degree": total == expected,
        "prop6": all(c.prop6 for c in certs),
    }
    report.details = {
        "cor8": {"lhs": lhs, "rhs": rhs},
        "global_degree": {"total": total, "expected": expected},
        "consistency": {
            "component_degree": all(dv.degree == dv.expected_degree for dv in divisors),
            "cor9_matches_weight": all(c.outside == (w == 0) for c, (_, w) in zip(certs, weights)),
            "multidegrees": all(ext.limit.degrees == multidegree(model, ext.twist)
                                for ext in extensions),
        },
    }
    if strict and not report.ok:
        failed = [k for k, v in report.checks.items() if not v]
        failed += [k for k, v in report.details["consistency"].items() if not v]
        raise IdentityCheckError(f"identity checks failed: {', '.join(failed)}", report)
    return report


@dataclass(frozen=True)
class Case12Condition:
    name: str
    holds: bool
    witnesses: tuple


def case12_check(model, report):
    """Necessary conditions for Z to avoid the singular points of the special fibre."""
    names = [c.name for c in model.components]
    selfs = tuple(f"{names[n.branches[0][0]]} self-node at {plane_integers(model.node_point(n))}"
                  for n in model.self_nodes)
    pairs = [(i, j) for i in range(model.t) for j in range(model.t) if i != j]
    l, delta, r, d = report.connecting, model.intersection_matrix, model.r, model.degree
    low = tuple(f"l({names[i]},{names[j]}) = {l[i][j]} < r = {r}"
                for i, j in pairs if l[i][j] < r)
    big = tuple(f"l({names[i]},{names[j]})*delta = {l[i][j] * delta[i][j]} > d = {d}"
                for i, j in pairs if l[i][j] * delta[i][j] > d)
    return (Case12Condition("smooth_open_components", not selfs, selfs),
            Case12Condition("connecting_at_least_r", not low, low),
            Case12Condition("connecting_times_delta_at_most_d", not big, big))


def divisor_key(model, entry):
    """Location key comparable across computations: plane point or (component, factor)."""
    if entry.kind == "factor":
        return ("factor", model.components[entry.component].name, entry.form.coeffs)
    return ("plane", entry.plane)


def divisor_map(model, entries):
    out = {}
    for e in entries:
        key = divisor_key(model, e)
        out[key] = out.get(key, 0) + e.weight
    return out


def form_divisor_on(model, i, form):
    """Weighted divisor of a plane form restricted to C_i, in ``divisor_map`` keys."""
    comp = model.components[i]
    out = {}
    for fac, mult in squarefree_factor(form.pullback(comp.parametrization)):
        if fac.degree == 1:
            key = ("plane", plane_integers(comp.point(root_of_linear(fac))))
        else:
            key = ("factor", comp.name, fac.coeffs)
        out[key] = out.get(key, 0) + mult
    return out


__all__ = ["WeightedPoint", "ComponentDivisor", "RamificationReport", "NodeCertificate",
           "Case12Condition", "component_ram_divisor", "vanishing_sequence",
           "ramification_weight", "node_weight", "node_certificate", "cor9_predicate",
           "limit_divisor", "case12_check", "expected_global_degree", "cor8_sides",
           "plane_integers", "divisor_map", "form_divisor_on"]
