"""Built-in families, emitted as family JSON objects.

``case11`` is the cubic x(y^2 + x^2 - z^2) degenerating with perturbation
c1*y^3 + c2*y^2*z; ``conic`` is the line pair xz + t*y^2; ``weierstrass4``
is a nodal cubic plus a secant line with its canonical system (k = 1).
The remaining entries are small models used by the tests and demos.
"""

from fractions import Fraction

from .algebra.forms import TernaryForm
from .errors import ValidationError
from .io import fraction_str


def _hyperplanes():
    return {"degree": 1, "basis": ["x", "y", "z"]}


def case11(c1=1, c2=1):
    c1, c2 = Fraction(c1), Fraction(c2)
    if c1 == 0 and c2 == 0:
        raise ValidationError("degenerate perturbation: c = (0, 0) gives h = 0")
    h = TernaryForm({(0, 0, 3, 0): c1, (0, 0, 2, 1): c2}, 3)
    return {
        "components": [
            {"name": "Q", "equation": "y^2+x^2-z^2",
             "parametrization": ["2*u*v", "v^2-u^2", "v^2+u^2"], "self_nodes": []},
            {"name": "M", "equation": "x", "parametrization": ["0", "u", "v"],
             "self_nodes": []},
        ],
        "perturbation": str(h),
        "nodes": [
            {"components": ["Q", "M"], "params": [[0, 1], [1, 1]]},   # p1 = (0:1:1)
            {"components": ["Q", "M"], "params": [[1, 0], [1, -1]]},  # p2 = (0:1:-1)
        ],
        "linear_system": _hyperplanes(),
    }


def case11_H(c1=1, c2=1):
    """c1*y^3 + 3*c2*y^2*z + 3*c1*y*z^2 + c2*z^3 as a string."""
    c1, c2 = Fraction(c1), Fraction(c2)
    return str(TernaryForm({(0, 0, 3, 0): c1, (0, 0, 2, 1): 3 * c2,
                            (0, 0, 1, 2): 3 * c1, (0, 0, 0, 3): c2}, 3))


def conic():
    return {
        "components": [
            {"name": "X", "equation": "x", "parametrization": ["0", "u", "v"], "self_nodes": []},
            {"name": "Z", "equation": "z", "parametrization": ["u", "v", "0"], "self_nodes": []},
        ],
        "perturbation": "y^2",
        "nodes": [{"components": ["X", "Z"], "params": [[1, 0], [0, 1]]}],
        "linear_system": _hyperplanes(),
    }


def weierstrass4():
    # Q: y^2 z = x^3 + x^2 z, node at (0:0:1) reached at (u:v) = (1:1) and (1:-1);
    # M: x = 3z meets Q at (0:1:0), (3:6:1), (3:-6:1).
    return {
        "components": [
            {"name": "Q", "equation": "y^2*z-x^3-x^2*z",
             "parametrization": ["u^2*v-v^3", "u^3-u*v^2", "v^3"],
             "self_nodes": [[[1, 1], [1, -1]]]},
            {"name": "M", "equation": "x-3*z", "parametrization": ["3*v", "u", "v"],
             "self_nodes": []},
        ],
        "perturbation": "x^4+y^4+z^4",
        "nodes": [
            {"components": ["Q", "M"], "params": [[1, 0], [1, 0]]},
            {"components": ["Q", "M"], "params": [[2, 1], [6, 1]]},
            {"components": ["Q", "M"], "params": [[-2, 1], [-6, 1]]},
        ],
        "linear_system": _hyperplanes(),
    }


def triangle():
    """Three lines xyz = 0: a cycle of rational curves (not of compact type)."""
    return {
        "components": [
            {"name": "X", "equation": "x", "parametrization": ["0", "u", "v"], "self_nodes": []},
            {"name": "Y", "equation": "y", "parametrization": ["u", "0", "v"], "self_nodes": []},
            {"name": "Z", "equation": "z", "parametrization": ["u", "v", "0"], "self_nodes": []},
        ],
        "perturbation": "x^3+y^3+z^3",
        "nodes": [
            {"components": ["X", "Y"], "params": [[0, 1], [0, 1]]},
            {"components": ["X", "Z"], "params": [[1, 0], [0, 1]]},
            {"components": ["Y", "Z"], "params": [[1, 0], [1, 0]]},
        ],
        "linear_system": _hyperplanes(),
    }


def smooth_conic():
    return {
        "components": [{"name": "C", "equation": "x*z-y^2",
                        "parametrization": ["u^2", "u*v", "v^2"], "self_nodes": []}],
        "perturbation": "x^2+z^2",
        "nodes": [],
        "linear_system": _hyperplanes(),
    }


def nodal_cubic():
    return {
        "components": [{"name": "Q", "equation": "y^2*z-x^3-x^2*z",
                        "parametrization": ["u^2*v-v^3", "u^3-u*v^2", "v^3"],
                        "self_nodes": [[[1, 1], [1, -1]]]}],
        "perturbation": "z^3+x*y^2",
        "nodes": [],
        "linear_system": _hyperplanes(),
    }


def conic_pencil():
    """Line pair with the pencil <y^2, xy + yz>, injective on both lines at twist 0."""
    data = conic()
    data["linear_system"] = {"degree": 2, "basis": ["y^2", "x*y+y*z"]}
    return data


EXAMPLES = {
    "case11": case11,
    "conic": conic,
    "weierstrass4": weierstrass4,
    "triangle": triangle,
    "smooth_conic": smooth_conic,
    "nodal_cubic": nodal_cubic,
    "conic_pencil": conic_pencil,
}


def example(name, *params):
    """Family JSON for a built-in example; ``params`` are rationals (case11 only)."""
    if name not in EXAMPLES:
        raise KeyError(f"unknown example {name!r}; known: {', '.join(EXAMPLES)}")
    if params and name != "case11":
        raise ValueError(f"example {name!r} takes no parameters")
    return EXAMPLES[name](*[Fraction(p) for p in params])


def load_example(name, *params, precision=None):
    from .io import family_from_json
    return family_from_json(example(name, *params), precision)


__all__ = ["EXAMPLES", "example", "load_example", "case11", "case11_H", "fraction_str"]
