import pytest

from combalg.parse import parse_polynomial
from combalg.poly import PolynomialRing
from combalg.segre import segre_ring

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def B():
    return PolynomialRing(("Z0", "Z1", "Z2"))


@pytest.fixture
def g(B):
    return parse_polynomial("Z0*Z1*Z2 + Z1^3 + Z2^3", B)


@pytest.fixture
def ctx12():
    return segre_ring(1, 2)


@pytest.fixture
def ex_main():
    """Column-major context and the seven generators of the Segre ideal of (g)."""
    from combalg.segre import segre_ideal_generators

    ctx = segre_ring(1, 2, major="column")
    g = parse_polynomial("Z0*Z1*Z2 + Z1^3 + Z2^3", ctx.B)
    return ctx, segre_ideal_generators(ctx, [], [g])


EXPECTED_SEVEN = ["X10*X11*X12", "X10*X11*X02", "X10*X01*X02", "X00*X01*X02", "X00*X11", "X00*X12", "X01*X12"]


def monos(ring, texts):
    return {parse_polynomial(t, ring).monomials()[0] for t in texts}
