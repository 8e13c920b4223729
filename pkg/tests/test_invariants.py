from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CONIFOLD, EXAMPLE, MATRIX, F
from qmpotential import GeometrySpec
from qmpotential.invariants import (
    compute_Ck,
    diagnostics,
    log_discriminant,
    quasimap_potential,
    vert_loop_consistency,
)
from qmpotential.series import PowerSeries, log_unit, pow_unit


def test_example_initial_constants():
    C = compute_Ck(EXAMPLE, 8)
    assert len(C.C) == EXAMPLE.n
    assert C[0] == PowerSeries.one(8)
    assert list(C[1].coeffs[:4]) == [1, 4, 36, 400]


def test_conifold_constants_are_trivial():
    C = compute_Ck(CONIFOLD, 10)
    assert C[0] == PowerSeries.one(10)
    assert C[1] == PowerSeries.one(10)


@pytest.mark.parametrize("spec", MATRIX, ids=lambda s: s.label())
def test_constants_are_units_with_constant_one(spec):
    C = compute_Ck(spec, 6)
    assert all(c[0] == 1 for c in C.C)
    assert C.order == 6


def test_extra_window_does_not_change_constants():
    assert compute_Ck(EXAMPLE, 5).C == compute_Ck(EXAMPLE, 5, W=3).C


def test_example_quasimap_potential():
    F_qm = quasimap_potential(EXAMPLE, compute_Ck(EXAMPLE, 6), 6)
    assert F_qm[0] == 0
    assert list(F_qm.coeffs[1:4]) == [F("-2/3"), F("-10/3"), F("-224/9")]


def test_conifold_potential_closed_form():
    F_qm = quasimap_potential(CONIFOLD, compute_Ck(CONIFOLD, 10), 10)
    assert F_qm == log_unit(PowerSeries([1, -1], 10)) * F("-1/12")
    assert list(F_qm.coeffs[1:]) == [Fraction(1, 12 * d) for d in range(1, 11)]


def test_potential_without_ck_terms_is_pure_discriminant():
    # m = 2 and n - r - 2 = 1 < m: the C_k sum is empty
    spec = GeometrySpec(3, (1,), (1, 1))
    D = 6
    F_qm = quasimap_potential(spec, compute_Ck(spec, D), D)
    coeff = Fraction(3 * (3 - 1 - 1 - 2) ** 2 + 3 - 1 + 2 - 3, 48)
    assert F_qm == log_discriminant(spec, D) * (-coeff)


@pytest.mark.parametrize("spec", MATRIX, ids=lambda s: s.label())
def test_first_coefficient_formula(spec):
    # q^1: kappa times the discriminant weight minus half the weighted C_k slopes
    n, r, m = spec.n, spec.r, spec.m
    C = compute_Ck(spec, 3)
    F_qm = quasimap_potential(spec, C, 3)
    weight = Fraction(3 * (n - 1 - r - m) ** 2 + n - r + m - 3, 48)
    slopes = sum(
        (Fraction((n - r - k) * (n - r - k - 1), 2) * C[k][1] for k in range(m, n - r - 1)), Fraction(0)
    )
    assert F_qm[1] == weight * spec.kappa - slopes / 2


def test_example_diagnostics():
    diag = diagnostics(EXAMPLE, compute_Ck(EXAMPLE, 8), 8)
    base = PowerSeries([1, -16], 8)
    assert diag.L == pow_unit(base, F("-1/4"))
    assert diag.R0 == pow_unit(base, F("-1/8"))
    assert list(diag.L.coeffs[:3]) == [1, 4, 40]
    assert diag.mu[0] == 0 and diag.mu[1] == 4


@pytest.mark.parametrize("spec", MATRIX, ids=lambda s: s.label())
def test_diagnostic_relations(spec):
    D = 7
    diag = diagnostics(spec, compute_Ck(spec, D), D)
    assert diag.L ** spec.n * PowerSeries([1, -spec.kappa], D) == PowerSeries.one(D)
    assert diag.R0 ** 2 == pow_unit(diag.L, spec.r - spec.m + 1)
    assert diag.loop[0] == 0 and diag.vert_primitive[0] == 0


@pytest.mark.parametrize("spec", MATRIX, ids=lambda s: s.label())
def test_vertex_plus_loop_reproduces_potential(spec):
    C = compute_Ck(spec, 8)
    assert vert_loop_consistency(spec, C, diagnostics(spec, C, 8), quasimap_potential(spec, C, 8))


def test_vertex_loop_detects_corrupted_constants():
    spec = GeometrySpec(6, (2,), (2, 2))
    D = 6
    C = compute_Ck(spec, D)
    F_qm = quasimap_potential(spec, C, D)
    bent = list(C.C)
    bent[2] = bent[2] + PowerSeries.monomial(2, D)
    C_bad = replace(C, C=tuple(bent))
    assert vert_loop_consistency(spec, C, diagnostics(spec, C, D), F_qm)
    assert not vert_loop_consistency(spec, C_bad, diagnostics(spec, C_bad, D), F_qm)


@st.composite
def cy_specs(draw):
    degrees = draw(st.lists(st.integers(1, 3), min_size=1, max_size=3).filter(lambda d: sum(d) >= 2))
    split = draw(st.integers(0, len(degrees)))
    return GeometrySpec(sum(degrees), degrees[:split], degrees[split:])


@settings(max_examples=15, deadline=None)
@given(cy_specs())
def test_random_specs_vertex_loop(spec):
    D = 4
    C = compute_Ck(spec, D)
    assert all(c[0] == 1 for c in C.C)
    assert vert_loop_consistency(spec, C, diagnostics(spec, C, D), quasimap_potential(spec, C, D))
