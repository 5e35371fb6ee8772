import pytest
from hypothesis import settings

from limitram.algebra import parse_form
from limitram.catalog import load_example

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def P(text):
    """Plane form with t allowed as a coefficient variable."""
    return parse_form(text, ("x", "y", "z"), jet_variable="t")


def B(text, degree=None):
    return parse_form(text, ("u", "v"), degree=degree)


@pytest.fixture(scope="session")
def case11():
    return load_example("case11", 1, 1)


@pytest.fixture(scope="session")
def conic():
    return load_example("conic")


@pytest.fixture(scope="session")
def w4():
    return load_example("weierstrass4")


@pytest.fixture(scope="session")
def triangle():
    return load_example("triangle")
