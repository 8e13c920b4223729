"""Wall-crossing from the quasimap potential to the Gromov-Witten potential.

The quasimap potential lives in the variable ``q``; the Gromov-Witten
potential in the mirror coordinate ``Q = q exp(I1/I0)``.  The correction
between them depends on the number ``m`` of bundle summands:

* ``m >= 2``: none, ``I0 = 1`` and ``I1 = 0``;
* ``m == 1``: ``A I1 / 24``;
* ``m == 0``: ``chi log(I0) / 24 + A (I1/I0) / 24``,

with ``A = int_X H c_{dim X - 1}(T_X)`` and ``chi`` the topological Euler
characteristic of the compact complete intersection.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import Optional, Sequence

from .ifunction import GeometrySpec, expand_I, extract_I0_I1
from .invariants import (
    DiagnosticSeries,
    InitialConstants,
    compute_Ck,
    diagnostics,
    quasimap_potential,
)
from .series import PowerSeries, compose, exp_nilconst, invert, log_unit, qddq, reversion

__all__ = [
    "PotentialReport",
    "chern_coefficient",
    "euler_characteristic",
    "mirror_map",
    "gw_potential",
    "nd_crosscheck",
    "compute_report",
]


@dataclass(frozen=True)
class PotentialReport:
    spec: GeometrySpec
    order: int
    C: InitialConstants
    I0: PowerSeries
    I1: PowerSeries
    F_qm: PowerSeries
    F_gw_q: PowerSeries
    Q_of_q: PowerSeries
    q_of_Q: PowerSeries
    N: tuple[Fraction, ...]
    chi_top: Optional[Fraction]
    chern_coeff: Fraction
    diagnostics: Optional[DiagnosticSeries] = None

    @property
    def F_gw_Q(self) -> PowerSeries:
        """Gromov-Witten potential in the mirror coordinate."""
        return PowerSeries([0, *self.N])


def _tangent_chern_series(spec: GeometrySpec, order: int) -> PowerSeries:
    """Total Chern class of ``T_X`` restricted to ``X'`` as a series in ``H``.

    ``c(T_X) = (1+H)^n prod_b (1 - l'_b H) / prod_a (1 + l_a H)``.
    """
    c = PowerSeries([comb(spec.n, i) for i in range(spec.n + 1)], order)
    for la in spec.l:
        c = c * invert(PowerSeries([1, la], order))
    for lb in spec.lp:
        c = c * PowerSeries([1, -lb], order)
    return c


def chern_coefficient(spec: GeometrySpec) -> Fraction:
    """``A = int_X H c_{dim X - 1}(T_X)``; zero for ``m >= 2``.

    For ``m = 1`` the integral is taken by localizing along the fiber,
    ``int_X a = int_{X'} a / e(O(-l'_1))``, which is finite because ``a``
    carries a factor ``H``.  Integration over ``X'`` of a top-degree class
    ``c H^{dim X'}`` gives ``c prod_a l_a``.
    """
    if spec.m >= 2:
        return Fraction(0)
    dim_base = spec.n - 1 - spec.r
    index = dim_base - (1 - spec.m)  # H^{1-m} is absorbed by H / e(fiber)
    if index < 0:
        return Fraction(0)
    c = _tangent_chern_series(spec, dim_base)
    return Fraction(prod(spec.l) * c[index]) / prod(-lb for lb in spec.lp)


def euler_characteristic(spec: GeometrySpec) -> Optional[Fraction]:
    """Topological Euler characteristic of ``X' = {deg l_a} in P^{n-1}``.

    ``chi = (prod l_a) [H^{n-1-r}] (1+H)^n / prod_a (1 + l_a H)``.  Only the
    compact case ``m = 0`` uses it; ``None`` is returned otherwise.
    """
    if spec.m:
        return None
    dim = spec.n - 1 - spec.r
    return Fraction(prod(spec.l) * _tangent_chern_series(spec, dim)[dim])


def mirror_map(I0: PowerSeries, I1: PowerSeries) -> PowerSeries:
    """``Q(q) = q exp(I1/I0)``."""
    if I0[0] != 1:
        raise ValueError("I0 must start with 1")
    return exp_nilconst(I1 / I0).shift(1)


def gw_potential(
    spec: GeometrySpec,
    C: InitialConstants,
    I0: PowerSeries,
    I1: PowerSeries,
    F_qm: PowerSeries,
    D: int,
    diag: Optional[DiagnosticSeries] = None,
) -> PotentialReport:
    I0, I1, F_qm = I0.truncate(D), I1.truncate(D), F_qm.truncate(D)
    A = chern_coefficient(spec)
    chi = euler_characteristic(spec)

    F = F_qm
    if spec.m == 1:
        F = F + I1 * (A / 24)
    elif spec.m == 0:
        F = F + log_unit(I0) * (chi / 24) + (I1 / I0) * (A / 24)

    Q = mirror_map(I0, I1)
    q_of_Q = reversion(Q)
    N = tuple(compose(F, q_of_Q).coeffs[1:])
    return PotentialReport(
        spec=spec,
        order=D,
        C=C,
        I0=I0,
        I1=I1,
        F_qm=F_qm,
        F_gw_q=F,
        Q_of_q=Q,
        q_of_Q=q_of_Q,
        N=N,
        chi_top=chi,
        chern_coeff=A,
        diagnostics=diag,
    )


def nd_crosscheck(F_gw_q: PowerSeries, Q_of_q: PowerSeries, N: Sequence) -> bool:
    """Re-expand ``sum_d N_d Q(q)^d`` forward and compare with ``F_gw_q``."""
    D = min(F_gw_q.order, Q_of_q.order, len(N))
    Q = Q_of_q.truncate(D)
    total = PowerSeries.zero(D)
    power = PowerSeries.one(D)
    for d in range(1, D + 1):
        power = power * Q
        total = total + power * Fraction(N[d - 1])
    return total == F_gw_q.truncate(D)


def c1_mirror_identity(C: InitialConstants, I0: PowerSeries, I1: PowerSeries) -> bool:
    """Whether ``C_1 = 1 + q d/dq (I1/I0)`` holds to the common order."""
    D = min(C.order, I0.order, I1.order)
    return C[1].truncate(D) == qddq(I1.truncate(D) / I0.truncate(D)) + 1


def compute_report(spec: GeometrySpec, D: int) -> PotentialReport:
    """Full pipeline: I-function, initial constants, both potentials, ``N_d``."""
    I0, I1 = extract_I0_I1(expand_I(spec, D, 1))
    C = compute_Ck(spec, D)
    F_qm = quasimap_potential(spec, C, D)
    diag = diagnostics(spec, C, D)
    return gw_potential(spec, C, I0, I1, F_qm, D, diag)
