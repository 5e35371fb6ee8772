"""JSON and table renderings of limits and ramification reports."""

from .fibre import multidegree
from .io import point_json
from .ramification import case12_check, plane_integers


def _node_where(model, node):
    names = [c.name for c in model.components]
    return {
        "components": [names[i] for i, _ in node.branches],
        "params": [point_json(p) for _, p in node.branches],
        "plane": list(plane_integers(model.node_point(node))),
    }


def where_json(model, entry):
    names = [c.name for c in model.components]
    if entry.kind == "point":
        return {"type": "point", "component": names[entry.component],
                "param": point_json(entry.param), "plane": list(entry.plane)}
    if entry.kind == "factor":
        return {"type": "factor", "component": names[entry.component],
                "form": str(entry.form), "degree": entry.form.degree}
    where = {"type": entry.kind}
    where.update(_node_where(model, entry.node))
    return where


def extensions_json(model, extensions):
    return [{"component": model.components[e.component].name, "twist": list(e.twist),
             "multidegree": list(multidegree(model, e.twist))} for e in extensions]


def limits_json(model, extensions, connecting):
    return {"extensions": extensions_json(model, extensions),
            "connecting_numbers": [list(row) for row in connecting]}


def report_json(report):
    model = report.model
    names = [c.name for c in model.components]
    nodes = []
    for (node, w), cert in zip(report.node_weights, report.certificates):
        entry = _node_where(model, node)
        entry.update({"weight": w, "l": cert.l_ij, "eps": [list(cert.eps_i), list(cert.eps_j)],
                      "outside_Z": cert.outside})
        nodes.append(entry)
    return {
        "extensions": extensions_json(model, report.extensions),
        "connecting_numbers": [list(row) for row in report.connecting],
        "Z": [{"where": where_json(model, e), "weight": e.weight} for e in report.entries],
        "checks": dict(report.checks),
        "details": {
            "total_degree": report.total_degree,
            "components": [{"component": names[d.component], "degree": d.degree,
                            "expected_degree": d.expected_degree} for d in report.components],
            "nodes": nodes,
            "cor8": report.details["cor8"],
            "global_degree": report.details["global_degree"],
            "consistency": report.details["consistency"],
            "case12": [{"condition": c.name, "holds": c.holds, "witnesses": list(c.witnesses)}
                       for c in case12_check(model, report)],
            "precision": model.precision,
        },
    }


def _table(headers, rows):
    cols = [headers] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[k]) for row in cols) for k in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cols]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _tuple(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


def limits_table(data):
    rows = [(e["component"], _tuple(e["twist"]), _tuple(e["multidegree"]))
            for e in data["extensions"]]
    out = ["Associated extensions", _table(["component", "twist", "multidegree"], rows)]
    names = [e["component"] for e in data["extensions"]]
    if len(names) > 1:
        matrix = [[n] + row for n, row in zip(names, data["connecting_numbers"])]
        out += ["", "Connecting numbers l_ij", _table(["l"] + names, matrix)]
    return "\n".join(out) + "\n"


def _where_str(where):
    kind = where["type"]
    if kind == "point":
        return f"{where['component']} at {_tuple(where['plane'])}"
    if kind == "factor":
        return f"{where['component']}: zeros of {where['form']}"
    if kind == "self_node":
        return f"self-node of {where['components'][0]} at {_tuple(where['plane'])}"
    return f"node {'/'.join(where['components'])} at {_tuple(where['plane'])}"


def report_table(data):
    out = [limits_table(data).rstrip(), "", "Limit ramification divisor Z"]
    rows = [(_where_str(z["where"]), z["where"].get("degree", 1), z["weight"]) for z in data["Z"]]
    out.append(_table(["location", "deg", "weight"], rows) if rows else "(empty)")
    det = data["details"]
    out += ["", f"total degree {det['total_degree']} (expected {det['global_degree']['expected']})"]
    if det["nodes"]:
        out += ["", "Nodes"]
        rows = [(_tuple(n["plane"]), "/".join(n["components"]), n["l"], _tuple(n["eps"][0]),
                 _tuple(n["eps"][1]), n["weight"]) for n in det["nodes"]]
        out.append(_table(["plane point", "components", "l", "eps_i", "eps_j", "weight"], rows))
    out += ["", "Checks"]
    out += [f"  {k}: {'pass' if v else 'FAIL'}" for k, v in data["checks"].items()]
    out += [f"  {k}: {'pass' if v else 'FAIL'}" for k, v in det["consistency"].items()]
    out += [f"  case12 {c['condition']}: {'holds' if c['holds'] else 'fails'}"
            for c in det["case12"]]
    return "\n".join(out) + "\n"
