import itertools

import pytest
from hypothesis import assume, given, strategies as st

from limitram import (associated_extension, associated_extensions, connecting_matrix,
                      connecting_number, connecting_vector, family_from_json, limit_at_twist,
                      multidegree, same_twist_class, saturate_lattice, valuation)
from limitram.algebra import TJet, linalg
from limitram.catalog import EXAMPLES, example, load_example
from limitram.errors import IterationBoundExceeded, PrecisionExhausted, PreconditionError
from limitram.lattice import (combine, default_start, is_admissible_start, lattice_contains,
                              limit_from_lattice)

ALL = sorted(EXAMPLES)


def jets(*powers):
    return tuple(TJet() if p is None else TJet.monomial(p) for p in powers)


def column_elements(lattice):
    return sorted(str(e).split("+O(")[0] for e in lattice.elements)


# --- saturation --------------------------------------------------------------

def test_saturation_trivial_twist(case11):
    L = saturate_lattice(case11, (0, 0))
    assert column_elements(L) == ["x", "y", "z"]


def test_saturation_twist_minus_m(case11):
    L = saturate_lattice(case11, (0, -1))
    assert column_elements(L) == ["t*y", "t*z", "x"]


def test_saturation_start_twist_for_m(case11):
    L = saturate_lattice(case11, (3, 0))
    assert column_elements(L) == ["t^-1*x", "y", "z"]


@pytest.mark.parametrize("n", [(0,), (4,), (-3,)])
def test_single_component_is_identity(n):
    # identity at n = 0; the representative n gives t^-n times it
    m = load_example("smooth_conic")
    L = saturate_lattice(m, n)
    for b, col in enumerate(L.columns):
        assert col == jets(*[-n[0] if a == b else None for a in range(3)])


def test_saturation_iteration_bound():
    data = example("case11")
    data["linear_system"]["basis"] = ["x", "y", "y+t^10*z"]
    m = family_from_json(data)
    with pytest.raises(IterationBoundExceeded):
        saturate_lattice(m, (0, 0), max_rounds=3)
    L = saturate_lattice(m, (0, 0))
    assert limit_from_lattice(m, L).injective[0]


def test_saturation_reports_low_precision():
    data = example("case11")
    data["linear_system"]["basis"] = ["x", "y", "y+t^10*z"]
    m = family_from_json(data, precision=8)
    with pytest.raises(PrecisionExhausted):
        saturate_lattice(m, (0, 0))


def _is_section(model, elem, n):
    if elem.is_zero():
        return True
    return all(valuation(model, elem, j) >= -n[j] for j in range(model.t))


def _brute_force(model, n, exps, values=(-1, 0, 1)):
    """Every small combination that is a section must lie in the computed lattice."""
    L = saturate_lattice(model, n)
    for col, elem in zip(L.columns, L.elements):
        assert _is_section(model, elem, n)
    size = len(model.basis)
    slots = [(a, e) for a in range(size) for e in exps]
    found = 0
    for vals in itertools.product(values, repeat=len(slots)):
        coeffs = [dict() for _ in range(size)]
        for (a, e), c in zip(slots, vals):
            if c:
                coeffs[a][e] = c
        vec = tuple(TJet(c) for c in coeffs)
        elem = combine(model.basis_jets(), vec)
        if _is_section(model, elem, n):
            found += 1
            assert lattice_contains(L, vec)
    return found


@pytest.mark.parametrize("name, n, exps", [
    ("case11", (0, -1), (0, 1)),
    ("case11", (3, 0), (-1, 0)),
    ("case11", (0, 0), (-1, 0)),
    ("conic", (0, 1), (-1, 0)),
    ("conic", (0, -1), (0, 1)),
    ("conic_pencil", (1, 0), (-1, 0, 1)),
])
def test_saturation_brute_force_oracle(name, n, exps):
    model = load_example(name, precision=12)
    assert model.degree <= 3
    assert _brute_force(model, n, exps) > 1


@pytest.mark.parametrize("name", ALL)
def test_saturation_invariant_and_degrees(name):
    model = load_example(name)
    for n in itertools.product(range(-2, 3), repeat=model.t):
        if min(n) != 0 and model.t > 1:
            continue
        limit = limit_at_twist(model, n)
        assert limit.degrees == multidegree(model, n)
        for i, forms in enumerate(limit.restrictions):
            assert all(f.degree == limit.degrees[i] for f in forms)
        rows = []
        for forms in limit.restrictions:
            width = max((len(f.coeffs) for f in forms), default=0)
            rows += [[f.coeffs[k] if k < len(f.coeffs) else 0 for f in forms]
                     for k in range(width)]
        assert linalg.rank(rows) == model.r + 1  # jointly injective


def test_limit_at_twist_examples(case11):
    Q, M = case11.index("Q"), case11.index("M")
    at0 = limit_at_twist(case11, (0, 0))
    phi = case11.components[Q].parametrization
    assert [f for f in at0.on(Q)] == list(phi)
    assert at0.injective[Q] and not at0.injective[M]
    assert sorted(map(str, at0.on(M))) == ["0", "u", "v"]

    at1 = limit_at_twist(case11, (0, -1))
    assert at1.degrees == (0, 3)
    assert at1.injective[M] and not at1.zero[Q]
    forms = {str(f) for f in at1.on(M)}
    assert forms == {"-u^3-u^2*v", "u^3-u*v^2", "u^2*v-v^3"}

    at2 = limit_at_twist(case11, (0, -2))
    assert at2.degrees[Q] == -2 and at2.zero[Q]


# --- associated extensions ---------------------------------------------------

def test_case11_extensions(case11):
    eq, em = associated_extensions(case11)
    assert same_twist_class(eq.twist, (0, 0))
    assert same_twist_class(em.twist, (0, -1)) and em.twist == (1, 0)
    assert eq.limit.degrees == (2, 1) and em.limit.degrees == (0, 3)
    assert connecting_number(eq, em) == 1 == connecting_number(em, eq)


def test_single_component_extension():
    m = load_example("smooth_conic")
    (e,) = associated_extensions(m)
    assert e.twist == (0,)
    assert connecting_matrix((e,)) == ((0,),)


def test_conic_connecting_number(conic):
    ex, ez = associated_extensions(conic)
    assert connecting_number(ex, ez) == 2
    assert connecting_vector(ex, ex) == (0, 0)


def test_default_start_is_admissible():
    for name in ALL:
        m = load_example(name)
        for i in range(m.t):
            assert is_admissible_start(m, i, default_start(m, i))


def test_inadmissible_start_is_rejected(case11):
    with pytest.raises(PreconditionError):
        associated_extension(case11, 0, start=(0, 0))


@pytest.mark.parametrize("name", ["case11", "conic", "triangle", "weierstrass4"])
@given(data=st.data())
def test_extension_independent_of_start(name, data):
    m = load_example(name)
    i = data.draw(st.integers(0, m.t - 1))
    start = tuple(0 if j == i else data.draw(st.integers(0, 14)) for j in range(m.t))
    assume(is_admissible_start(m, i, start))
    shift = data.draw(st.integers(-3, 3))
    start = tuple(x + shift for x in start)
    assert associated_extension(m, i, start).twist == associated_extension(m, i).twist


@pytest.mark.parametrize("name", ALL)
def test_extensions_satisfy_characterization(name):
    m = load_example(name)
    for ext in associated_extensions(m):
        i = ext.component
        assert ext.limit.injective[i]
        assert not any(ext.limit.zero[j] for j in range(m.t) if j != i)
        assert ext.limit.degrees == multidegree(m, ext.twist)
        assert min(ext.twist) == 0


@pytest.mark.parametrize("name", ALL)
def test_connecting_vectors_obey_bounds(name):
    m = load_example(name)
    exts = associated_extensions(m)
    for a in exts:
        for b in exts:
            vec = connecting_vector(a, b)
            assert vec[a.component] == 0
            assert all(0 <= x <= vec[b.component] for x in vec)


@pytest.mark.parametrize("name", ["case11", "conic", "triangle", "conic_pencil"])
@given(data=st.data())
def test_injective_on_two_components_forces_equal_extensions(name, data):
    m = load_example(name)
    n = tuple(data.draw(st.integers(-3, 3)) for _ in range(m.t))
    limit = limit_at_twist(m, n)
    exts = associated_extensions(m)
    for i in range(m.t):
        for j in range(m.t):
            if limit.injective[i] and limit.injective[j]:
                assert exts[i].twist == exts[j].twist


def test_equal_extensions_case_is_not_vacuous():
    m = load_example("conic_pencil")
    limit = limit_at_twist(m, (0, 0))
    assert all(limit.injective)
    a, b = associated_extensions(m)
    assert a.twist == b.twist == (0, 0)


# --- basis choice ------------------------------------------------------------

def _transformed(name, rows):
    data = example(name)
    data["linear_system"]["basis"] = rows
    return family_from_json(data)


@pytest.mark.parametrize("name, rows, matrix", [
    ("case11", ["x+y", "y-2*z+t*x", "3*z+t^2*y"],
     [[{0: 1}, {0: 1}, {}], [{1: 1}, {0: 1}, {0: -2}], [{}, {2: 1}, {0: 3}]]),
    ("conic", ["2*x+t*z", "y", "z-t*y"],
     [[{0: 2}, {}, {1: 1}], [{}, {0: 1}, {}], [{}, {1: -1}, {0: 1}]]),
])
def test_results_independent_of_basis(name, rows, matrix):
    base = load_example(name)
    other = _transformed(name, rows)
    A = [[TJet(c) for c in row] for row in matrix]  # other.basis[b] = sum_a A[b][a] base.basis[a]
    assert [e.twist for e in associated_extensions(base)] == \
        [e.twist for e in associated_extensions(other)]
    for ext_b, ext_o in zip(associated_extensions(base), associated_extensions(other)):
        for col in ext_o.lattice.columns:
            converted = []
            for a in range(3):
                acc = TJet()
                for b in range(3):
                    acc = acc + col[b] * A[b][a]
                converted.append(acc)
            assert lattice_contains(ext_b.lattice, converted)
