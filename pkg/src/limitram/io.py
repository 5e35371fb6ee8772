"""JSON family descriptions and exact serialization helpers."""

import json
from fractions import Fraction

from .algebra.forms import ProjectivePoint, fraction_str, proj_point
from .algebra.parse import parse_form
from .errors import ParseError
from .fibre import ComponentSpec, FamilyModel, Node

PLANE = ("x", "y", "z")
LINE = ("u", "v")


def _rational(value, where):
    if isinstance(value, bool):
        raise ParseError(f"{where}: expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"{where}: bad rational literal {value!r}") from None
    raise ParseError(f"{where}: expected an integer or \"p/q\" string, got {value!r}")


def _point(pair, where):
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise ParseError(f"{where}: projective point must be a pair [p, q]")
    a, b = (_rational(x, where) for x in pair)
    try:
        return proj_point(a, b)
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from None


def point_json(p):
    return list(p.integers())


def _require(obj, key, kind, where):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"{where}: missing field {key!r}")
    value = obj[key]
    if not isinstance(value, kind):
        raise ParseError(f"{where}.{key}: expected {getattr(kind, '__name__', kind)}")
    return value


def family_from_json(data, precision=None):
    """Build a ``FamilyModel`` from the family JSON object (already decoded)."""
    if not isinstance(data, dict):
        raise ParseError("family description must be a JSON object")
    comps_json = _require(data, "components", list, "family")
    components = []
    for n, cj in enumerate(comps_json):
        where = f"components[{n}]"
        name = _require(cj, "name", str, where)
        equation = parse_form(_require(cj, "equation", str, where), PLANE)
        phi_json = _require(cj, "parametrization", list, where)
        if len(phi_json) != 3 or not all(isinstance(s, str) for s in phi_json):
            raise ParseError(f"{where}.parametrization: expected three strings")
        phi = [parse_form(s, LINE) for s in phi_json]
        nonzero = {f.degree for f, s in zip(phi, phi_json) if not f.is_zero()}
        if len(nonzero) > 1:
            raise ParseError(f"{where}.parametrization: forms of different degrees")
        e = nonzero.pop() if nonzero else 0
        phi = tuple(parse_form(s, LINE, degree=e) for s in phi_json)
        selfs = []
        for m, pair in enumerate(cj.get("self_nodes", [])):
            if not isinstance(pair, list) or len(pair) != 2:
                raise ParseError(f"{where}.self_nodes[{m}]: expected two branch points")
            selfs.append(tuple(_point(p, f"{where}.self_nodes[{m}]") for p in pair))
        components.append(ComponentSpec(name, equation, phi, tuple(selfs)))

    names = [c.name for c in components]
    nodes = []
    for n, nj in enumerate(data.get("nodes", [])):
        where = f"nodes[{n}]"
        cnames = _require(nj, "components", list, where)
        params = _require(nj, "params", list, where)
        if len(cnames) != 2 or len(params) != 2:
            raise ParseError(f"{where}: a node has exactly two branches")
        branches = []
        for cname, p in zip(cnames, params):
            if cname not in names:
                raise ParseError(f"{where}: unknown component {cname!r}")
            branches.append((names.index(cname), _point(p, where)))
        nodes.append(Node(tuple(branches)))

    h = parse_form(_require(data, "perturbation", str, "family"), PLANE)
    ls = _require(data, "linear_system", dict, "family")
    k = _require(ls, "degree", int, "linear_system")
    if "basis" in ls:
        basis_json = _require(ls, "basis", list, "linear_system")
        basis = tuple(parse_form(s, PLANE, jet_variable="t", degree=k) for s in basis_json)
    else:
        basis = complete_basis(k)
    if precision is None and data.get("precision") is not None:
        precision = data["precision"]
        if not isinstance(precision, int) or isinstance(precision, bool):
            raise ParseError("family.precision: expected an integer")
    return FamilyModel(tuple(components), h, tuple(nodes), k, basis, precision)


def complete_basis(k):
    """All monomials of degree k: the complete system |O(k)| (canonical when k = d - 3)."""
    monos = [(a, b, k - a - b) for a in range(k, -1, -1) for b in range(k - a, -1, -1)]
    return tuple(parse_form(_mono_str(m), PLANE, degree=k) for m in monos)


def _mono_str(m):
    parts = [v if e == 1 else f"{v}^{e}" for v, e in zip(PLANE, m) if e]
    return "*".join(parts) or "1"


def family_to_json(model):
    names = [c.name for c in model.components]
    return {
        "precision": model.precision,
        "components": [{
            "name": c.name,
            "equation": str(c.equation),
            "parametrization": [str(f) for f in c.parametrization],
            "self_nodes": [[point_json(p), point_json(q)] for p, q in c.self_nodes],
        } for c in model.components],
        "perturbation": str(model.perturbation),
        "nodes": [{
            "components": [names[i] for i, _ in node.branches],
            "params": [point_json(p) for _, p in node.branches],
        } for node in model.nodes],
        "linear_system": {"degree": model.k, "basis": [str(f) for f in model.basis]},
    }


def load_family(text, precision=None):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", exc.pos) from None
    return family_from_json(data, precision)


def dumps(obj):
    """Deterministic JSON text."""
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


__all__ = ["family_from_json", "family_to_json", "load_family", "complete_basis",
           "fraction_str", "point_json", "dumps", "ProjectivePoint"]
