"""Initial constants, the elliptic quasimap potential and its diagnostics."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .cyclotomic import apply_H_plus_zqddq, extract_Hk_at_w0, iexp_mul_scalar_series
from .ifunction import GeometrySpec, expand_I
from .series import PowerSeries, integrate_over_x, invert, log_unit, pow_unit

__all__ = [
    "InitialConstants",
    "DiagnosticSeries",
    "compute_Ck",
    "log_discriminant",
    "quasimap_potential",
    "diagnostics",
    "vert_loop_consistency",
]


@dataclass(frozen=True)
class InitialConstants:
    n: int
    r: int
    m: int
    C: tuple[PowerSeries, ...]

    def __getitem__(self, k: int) -> PowerSeries:
        return self.C[k]

    @property
    def order(self) -> int:
        return min(c.order for c in self.C)


@dataclass(frozen=True)
class DiagnosticSeries:
    L: PowerSeries
    mu: PowerSeries
    R0: PowerSeries
    loop: PowerSeries
    vert_primitive: PowerSeries


def compute_Ck(spec: GeometrySpec, D: int, W: int = 0) -> InitialConstants:
    """Run ``B_k = (H + z q d/dq)(B_{k-1} / C_{k-1})`` for ``k = 1 .. n-1``.

    ``C_k`` is the ``H^k`` coefficient of ``B_k`` at ``w^0``.  ``B_0`` is
    expanded with ``n - 1`` extra w-orders since every step eats one.
    """
    n = spec.n
    B = expand_I(spec, D, W + n - 1)
    C = [extract_Hk_at_w0(B, 0)]
    for k in range(1, n):
        B = apply_H_plus_zqddq(iexp_mul_scalar_series(B, invert(C[k - 1])))
        C.append(extract_Hk_at_w0(B, k))
    return InitialConstants(n, spec.r, spec.m, tuple(C))


def log_discriminant(spec: GeometrySpec, D: int) -> PowerSeries:
    """``log(1 - kappa q)`` to order ``D``."""
    return log_unit(PowerSeries([1, -spec.kappa], D))


def _ck_range(spec: GeometrySpec) -> range:
    return range(spec.m, spec.n - spec.r - 2 + 1)


def _weighted_log_C(spec: GeometrySpec, C: InitialConstants, D: int) -> PowerSeries:
    """``sum_{k=m}^{n-r-2} binom(n-r-k, 2) log C_k``; zero when the range is empty."""
    total = PowerSeries.zero(D)
    for k in _ck_range(spec):
        w = comb(spec.n - spec.r - k, 2)
        if w:
            total = total + log_unit(C[k].truncate(D)) * w
    return total


def quasimap_potential(spec: GeometrySpec, C: InitialConstants, D: int) -> PowerSeries:
    n, r, m = spec.n, spec.r, spec.m
    coeff = Fraction(3 * (n - 1 - r - m) ** 2 + n - r + m - 3, 48)
    return log_discriminant(spec, D) * (-coeff) - _weighted_log_C(spec, C, D) * Fraction(1, 2)


def diagnostics(spec: GeometrySpec, C: InitialConstants, D: int) -> DiagnosticSeries:
    n, r, m = spec.n, spec.r, spec.m
    logdisc = log_discriminant(spec, D)
    L = pow_unit(PowerSeries([1, -spec.kappa], D), Fraction(-1, n))
    mu = integrate_over_x(L - 1)
    R0 = pow_unit(L, Fraction(r - m + 1, 2))

    inv_sum = sum((Fraction(1, x) for x in spec.l + spec.lp), Fraction(0))
    loop = (
        mu * (Fraction(n, 24) * (n - 1 - 2 * inv_sum))
        - logdisc * Fraction(3 * (n - 1 - r - m) ** 2 + (n - 2), 24)
        - _weighted_log_C(spec, C, D)
    )
    vert = log_unit(R0) * Fraction(-n, 24) + mu * (Fraction(1, 24) * (n * inv_sum - comb(n, 2)))
    return DiagnosticSeries(L=L, mu=mu, R0=R0, loop=loop, vert_primitive=vert)


def vert_loop_consistency(
    spec: GeometrySpec, C: InitialConstants, diag: DiagnosticSeries, F: PowerSeries
) -> bool:
    """Check ``F = vert_primitive + loop / 2`` coefficientwise.

    This is ``q dF/dq = (vertex sum) + (loop sum)`` integrated once, both
    sides vanishing at ``q = 0``.
    """
    D = min(F.order, diag.loop.order, diag.vert_primitive.order)
    rhs = diag.vert_primitive + diag.loop * Fraction(1, 2)
    return F.truncate(D) == rhs.truncate(D) and F[0] == 0
