import sys
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from qmpotential import GeometrySpec
from qmpotential.series import PowerSeries

EXAMPLE = GeometrySpec(4, (2,), (2,))
CONIFOLD = GeometrySpec(2, (), (1, 1))
QUINTIC = GeometrySpec(5, (5,), ())
LOCAL_P2 = GeometrySpec(3, (), (3,))
MIXED = GeometrySpec(6, (2, 2), (2,))
MATRIX = (EXAMPLE, CONIFOLD, QUINTIC, LOCAL_P2, MIXED)

rationals = st.builds(
    Fraction, st.integers(min_value=-30, max_value=30), st.integers(min_value=1, max_value=12)
)


@st.composite
def series(draw, order=None, const=None, min_order=0, max_order=7):
    D = draw(st.integers(min_order, max_order)) if order is None else order
    c = draw(st.lists(rationals, min_size=D + 1, max_size=D + 1))
    if const is not None:
        c[0] = Fraction(const)
    return PowerSeries(c)


@st.composite
def reversible(draw, max_order=7):
    a = draw(series(const=0, min_order=1, max_order=max_order))
    lead = draw(rationals.filter(bool))
    c = list(a.coeffs)
    c[1] = lead
    return PowerSeries(c)


def F(x):
    return Fraction(x)


@pytest.fixture(scope="session")
def example_report():
    from qmpotential import compute_report

    return compute_report(EXAMPLE, 10)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for i, (ok, detail) in sorted(acceptance.RESULTS.items()):
        terminalreporter.write_line(acceptance.line(i, ok, detail))
