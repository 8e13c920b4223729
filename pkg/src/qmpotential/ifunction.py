"""The specialized I-function of a local complete intersection.

For a geometry ``(n, l, l')`` the degree-``d`` term of the I-function at
``t = 0`` with the torus weights set to the ``n``-th roots of unity is::

    prod_a prod_{k=1}^{l_a d} (l_a H + k z) * prod_b prod_{k=0}^{l'_b d - 1} (-l'_b H - k z)
    -----------------------------------------------------------------------------------
                         prod_{k=1}^{d} ((H + k z)^n - 1)

Numerator and denominator both have ``z``-degree ``n d``; dividing every
factor by ``z`` gives a series in ``w = 1/z`` with coefficients in
``Q[H]/(H^n - 1)``, which is what :func:`expand_I` produces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod
from typing import Sequence

from .cyclotomic import HPoly, IExpansion, apply_H_plus_zqddq
from .errors import InvalidSpec
from .series import PowerSeries

__all__ = ["GeometrySpec", "expand_I", "extract_I0_I1", "pf_check", "pf_residual"]


@dataclass(frozen=True)
class GeometrySpec:
    """Total space of ``sum_b O(-l'_b)`` over the complete intersection
    ``X' = {deg l_a}`` in ``P^{n-1}``.
    """

    n: int
    l: tuple[int, ...] = field(default=())
    lp: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "l", tuple(int(x) for x in self.l))
        object.__setattr__(self, "lp", tuple(int(x) for x in self.lp))
        if self.n < 2:
            raise InvalidSpec(f"need n >= 2, got n={self.n}")
        if any(x < 1 for x in self.l + self.lp):
            raise InvalidSpec("all degrees must be positive")
        total = sum(self.l) + sum(self.lp)
        if total != self.n:
            raise InvalidSpec(
                f"Calabi-Yau condition fails: sum(l) + sum(lp) = {total} but n = {self.n}"
            )

    @property
    def r(self) -> int:
        return len(self.l)

    @property
    def m(self) -> int:
        return len(self.lp)

    @property
    def kappa(self) -> int:
        """Discriminant constant: the mirror family degenerates at ``1 - kappa q = 0``."""
        return prod(a**a for a in self.l) * prod((-b) ** b for b in self.lp)

    def label(self) -> str:
        return f"({self.n},{list(self.l)},{list(self.lp)})"

    def to_dict(self) -> dict:
        return {"n": self.n, "l": list(self.l), "lp": list(self.lp)}


def _times_linear(f: list[HPoly], c: int, k: int) -> list[HPoly]:
    """Multiply the w-series ``f`` by ``c H w + k`` (truncated)."""
    out = []
    for j, h in enumerate(f):
        t = h.scale(k)
        if j and c:
            t = t + f[j - 1].times_H(1).scale(c)
        out.append(t)
    return out


def _denominator(n: int, k: int, W: int) -> list[HPoly]:
    """``(H w + k)^n - w^n`` as a w-polynomial, truncated at ``W``."""
    u = [HPoly.H(n, i, comb(n, i) * k ** (n - i)) for i in range(min(n, W) + 1)]
    if n <= W:
        u[n] = u[n] - HPoly.one(n)  # H^n w^n - w^n vanishes in the quotient ring
    return u


def _divide(f: list[HPoly], u: list[HPoly]) -> list[HPoly]:
    """``f / u`` in ``R[[w]]``; ``u[0]`` is a non-zero rational multiple of 1."""
    lead = u[0][0]
    inv = 1 / Fraction(lead)
    g: list[HPoly] = []
    for j, fj in enumerate(f):
        acc = fj
        for i in range(1, min(j, len(u) - 1) + 1):
            if not u[i].is_zero():
                acc = acc - u[i] * g[j - i]
        g.append(acc.scale(inv))
    return g


def expand_I(spec: GeometrySpec, D: int, W: int) -> IExpansion:
    """The specialized I-function to ``q^D`` and ``w^W``.

    The degree-``d`` term is built from the degree ``d-1`` term by the
    ``n`` new numerator factors and one denominator factor.
    """
    if not isinstance(spec, GeometrySpec):
        raise InvalidSpec("expand_I needs a GeometrySpec")
    if D < 0 or W < 0:
        raise ValueError("orders must be non-negative")
    n = spec.n
    zero = HPoly.zero(n)
    term = [HPoly.one(n)] + [zero] * W
    rows = [term]
    for d in range(1, D + 1):
        for la in spec.l:
            for k in range(la * (d - 1) + 1, la * d + 1):
                term = _times_linear(term, la, k)
        for lb in spec.lp:
            for k in range(lb * (d - 1), lb * d):
                term = [h.scale(-1) for h in _times_linear(term, lb, k)]
        term = _divide(term, _denominator(n, d, W))
        rows.append(term)
    return IExpansion(n, rows, 0, 0)


def extract_I0_I1(a: IExpansion) -> tuple[PowerSeries, PowerSeries]:
    """``I0`` (``H^0`` at ``w^0``) and ``I1`` (``H^1`` at ``w^1``)."""
    if a.grade:
        raise ValueError("I0/I1 are read off the ungraded I-function expansion")
    return a.coefficient_series(0, 0), a.coefficient_series(1, 1)


def pf_residual(spec: GeometrySpec, a: IExpansion) -> IExpansion:
    """Apply the Picard-Fuchs operator to ``a``.

    ``z d/dt`` acts as ``H + z q d/dq`` and the explicit ``z`` factors as
    shifts in ``w``.  Needs ``a.wmax >= n``.
    """
    lhs = a
    for _ in range(spec.n):
        lhs = apply_H_plus_zqddq(lhs)

    # prod_a prod_{m=1}^{l_a} (l_a D + m z) * prod_b prod_{m=0}^{l'_b-1} (-l'_b D - m z)
    rhs = a
    for la in spec.l:
        for mm in range(1, la + 1):
            rhs = apply_H_plus_zqddq(rhs).scale(la) + rhs.times_z().scale(mm)
    for lb in spec.lp:
        for mm in range(lb):
            nxt = apply_H_plus_zqddq(rhs).scale(-lb)
            if mm:
                nxt = nxt - rhs.times_z().scale(mm)
            rhs = nxt
    return lhs - a - rhs.times_q()


def pf_check(spec: GeometrySpec, a: IExpansion) -> bool:
    """True iff the Picard-Fuchs operator kills ``a`` on the known window."""
    res = pf_residual(spec, a)
    return all(h.is_zero() for row in res.table for h in row)
