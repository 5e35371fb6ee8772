import math

import pytest
from hypothesis import given, strategies as st

from limitram import (canonical_twist, decompose_twist, family_from_json, multidegree,
                      normalize_twist, restrict_section, same_twist_class, validate_family,
                      valuation)
from limitram.algebra import BinaryForm
from limitram.catalog import EXAMPLES, example, load_example
from limitram.errors import PrecisionExhausted, PreconditionError

from conftest import B, P

twists2 = st.tuples(st.integers(-4, 4), st.integers(-4, 4))


def invalid(data):
    rep = validate_family(family_from_json(data))
    assert not rep.valid
    return " | ".join(rep.errors)


# --- validation --------------------------------------------------------------

@pytest.mark.parametrize("name", sorted(EXAMPLES))
def test_builtin_examples_validate(name):
    assert validate_family(load_example(name)).valid


def test_case11_warns_about_h_at_a_node(case11):
    rep = validate_family(case11)
    assert rep.valid
    assert len(rep.warnings) == 1 and "(0:1:-1)" in rep.warnings[0]
    assert validate_family(load_example("case11", 1, 2)).warnings == []


def test_h_vanishing_on_a_component_is_invalid():
    data = example("case11")
    data["perturbation"] = "x*y^2"
    assert "vanishes identically on component M" in invalid(data)


def test_conic_family_has_one_node(conic):
    assert conic.intersection_matrix == ((-1, 1), (1, -1))
    (node,) = conic.nodes
    assert conic.node_point(node) == (0, 1, 0)


def test_missing_node_is_reported():
    data = example("case11")
    del data["nodes"][1]
    assert "meet in 2 points" in invalid(data)


def test_wrong_branch_parameter_is_reported():
    data = example("case11")
    data["nodes"][0]["params"][1] = [2, 1]
    assert "different plane points" in invalid(data)


def test_reducible_equation_is_reported():
    data = example("conic")
    data["components"][0]["equation"] = "x"
    data["components"][1]["equation"] = "z"
    data["components"].append({"name": "W", "equation": "x^2-y^2",
                               "parametrization": ["u^2", "u*v", "v^2"], "self_nodes": []})
    assert "reducible" in invalid(data)


def test_equation_must_vanish_on_parametrization():
    data = example("conic")
    data["components"][0]["parametrization"] = ["u", "u", "v"]
    assert "does not vanish along its parametrization" in invalid(data)


def test_self_node_count_is_checked():
    data = example("nodal_cubic")
    data["components"][0]["self_nodes"] = []
    assert "self-nodes" in invalid(data)


def test_tangency_is_not_a_node():
    # the line y = z meets the conic x^2 + y^2 - z^2 only at (0:1:1), doubly
    data = {
        "components": [
            {"name": "Q", "equation": "x^2+y^2-z^2",
             "parametrization": ["2*u*v", "v^2-u^2", "v^2+u^2"], "self_nodes": []},
            {"name": "L", "equation": "y-z", "parametrization": ["u", "v", "v"],
             "self_nodes": []},
        ],
        "perturbation": "x^3+y^3+z^3",
        "nodes": [{"components": ["Q", "L"], "params": [[0, 1], [0, 1]]}],
        "linear_system": {"degree": 1},
    }
    msg = invalid(data)
    assert "transversal" in msg or "meet in" in msg


def test_dependent_linear_system_is_reported():
    data = example("case11")
    data["linear_system"]["basis"] = ["x", "y", "2*y"]
    assert "dependent" in invalid(data)


def test_basis_with_t_coefficients_is_accepted():
    data = example("case11")
    data["linear_system"]["basis"] = ["x", "y", "y+t^3*z"]
    assert validate_family(family_from_json(data)).valid


# --- twists ------------------------------------------------------------------

def test_multidegree_examples(case11):
    assert multidegree(case11, (0, 0)) == (2, 1)
    assert multidegree(case11, (0, -1)) == (0, 3)
    assert multidegree(case11, (1, 1)) == (2, 1)


@given(twists2, st.integers(-5, 5))
def test_multidegree_conserves_degree_and_ignores_all_ones(n, s):
    m = load_example("case11")
    degs = multidegree(m, n)
    assert sum(degs) == m.k * m.degree
    assert multidegree(m, (n[0] + s, n[1] + s)) == degs


@given(st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)), st.integers(0, 2))
def test_decompose_twist_properties(n, i):
    E, F = decompose_twist(n, i)
    assert E[i] == F[i] == 0
    assert all(e >= 0 and f >= 0 and e * f == 0 for e, f in zip(E, F))
    assert same_twist_class(tuple(e - f for e, f in zip(E, F)), n)
    assert min(canonical_twist(n)) == 0
    assert canonical_twist(canonical_twist(n)) == canonical_twist(n)


def test_decompose_examples():
    assert decompose_twist((0, -1), 0) == ((0, 0), (0, 1))
    assert decompose_twist((0, 2, -1), 0) == ((0, 2, 0), (0, 0, 1))
    assert decompose_twist((1, 1), 1) == ((0, 0), (0, 0))
    assert normalize_twist((3, 5), 1) == (-2, 0)


# --- valuations --------------------------------------------------------------

def test_valuation_examples(case11):
    Q, M = case11.index("Q"), case11.index("M")
    assert valuation(case11, P("x"), M) == 1
    assert valuation(case11, P("t*x"), Q) == 1
    assert valuation(case11, P("y"), Q) == 0
    assert valuation(case11, P("x^2+y^2-z^2"), Q) == 1  # q_Q = -t*h/x
    assert valuation(case11, P("0"), Q) == math.inf


def test_valuation_with_declared_denominator(case11):
    M = case11.index("M")
    assert valuation(case11, P("x"), M, t_power=1) == 0
    assert valuation(case11, P("y"), M, q_powers={M: 1}) == -1


def test_valuation_reports_exhausted_precision(case11):
    with pytest.raises(PrecisionExhausted):
        valuation(case11, P("x").truncate(1), case11.index("M"))


elements = st.lists(st.integers(-3, 3), min_size=6, max_size=6).map(
    lambda c: P("+".join(f"({a})*{m}" for a, m in zip(c, ["x", "y", "z", "t*x", "t*y", "t^2*z"]))))


@given(elements, st.integers(0, 1))
def test_valuation_of_t_multiple(elem, i):
    m = load_example("case11")
    if elem.is_zero():
        return
    assert valuation(m, elem * P("t"), i) == 1 + valuation(m, elem, i)


# --- restriction -------------------------------------------------------------

def test_restriction_examples(case11):
    M = case11.index("M")
    assert restrict_section(case11, P("y"), (0, 0), M) == B("u")
    assert restrict_section(case11, P("x"), (0, 0), M) == BinaryForm.zero(1)
    minus_h = -case11.pulled_h[M]
    assert restrict_section(case11, P("x"), (0, -1), M) == minus_h
    assert restrict_section(case11, P("x"), (0, -1), M) == B("-u^3-u^2*v")


def test_restriction_requires_a_section(case11):
    with pytest.raises(PreconditionError):
        restrict_section(case11, P("y"), (0, -1), case11.index("M"))


@given(elements, twists2, st.integers(0, 1), st.integers(-3, 3))
def test_restriction_zero_iff_extra_vanishing(elem, n, i, shift):
    m = load_example("case11")
    if elem.is_zero():
        return
    if any(valuation(m, elem, j) < -n[j] for j in range(2)):
        return
    R = restrict_section(m, elem, n, i)
    assert R.degree == multidegree(m, n)[i]
    assert R.is_zero() == (valuation(m, elem, i) >= -n[i] + 1)
    # V at n + (s, s) is t^-s times V at n
    assert restrict_section(m, elem.shift_t(-shift), (n[0] + shift, n[1] + shift), i) == R
