"""Truncated univariate power series over the rationals.

A :class:`PowerSeries` stores the coefficients ``c_0 .. c_D`` of
``c_0 + c_1 q + ... + c_D q^D``; ``D`` is the *order* and every coefficient
above it is unknown, not zero.  Binary operations return a series of the
smaller input order, unary analytic operations (``log``, ``exp``, ``qddq``,
...) keep the order of their argument.

Scalars are :class:`fractions.Fraction` throughout, so every result is exact
and stored in lowest terms.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import NonzeroConstant, NotReversible, NotUnitOne, ZeroConstantTerm

Scalar = Union[int, Fraction]

__all__ = [
    "PowerSeries",
    "add",
    "mul",
    "invert",
    "log_unit",
    "exp_nilconst",
    "pow_unit",
    "qddq",
    "integrate_over_x",
    "compose",
    "substitute_qexp",
    "reversion",
    "to_fraction",
    "from_strings",
]


def to_fraction(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-10/9"`` to a Fraction.

    Floats are rejected on purpose; nothing in this package is approximate.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


class PowerSeries:
    """Immutable truncated power series ``sum_{d <= order} c_d q^d``.

    Parameters
    ----------
    coeffs : iterable
        Coefficients from ``q^0`` upward (ints, Fractions or rational strings).
    order : int, optional
        Truncation order.  Defaults to ``len(coeffs) - 1``; if larger, the
        missing coefficients are zero, if smaller, the list is cut.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = (), order: int | None = None):
        c = [to_fraction(x) for x in coeffs]
        if order is None:
            if not c:
                raise ValueError("order is required for an empty coefficient list")
            order = len(c) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(c) <= order:
            c.extend([Fraction(0)] * (order + 1 - len(c)))
        self._c = tuple(c[: order + 1])

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "PowerSeries":
        return cls([value], order)

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls([1], order)

    @classmethod
    def monomial(cls, degree: int, order: int, coeff: Scalar = 1) -> "PowerSeries":
        """``coeff * q**degree`` truncated at ``order``."""
        c = [Fraction(0)] * (order + 1)
        if degree <= order:
            c[degree] = to_fraction(coeff)
        return cls(c, order)

    # -- container protocol -------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    def __getitem__(self, d):
        return self._c[d]

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, PowerSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"PowerSeries([{', '.join(str(c) for c in self._c)}])"

    def __str__(self) -> str:
        terms = []
        for d, c in enumerate(self._c):
            if c == 0:
                continue
            if d == 0:
                terms.append(str(c))
            else:
                mono = "q" if d == 1 else f"q^{d}"
                terms.append(mono if c == 1 else f"({c})*{mono}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^{self.order + 1})"

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return PowerSeries(self._c, order)

    def to_strings(self) -> list[str]:
        return [str(c) for c in self._c]

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries.constant(to_fraction(other), self.order)

    def __add__(self, other):
        try:
            return add(self, self._coerce(other))
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries([-c for c in self._c])

    def __sub__(self, other):
        try:
            return add(self, -self._coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return mul(self, other)
        try:
            s = to_fraction(other)
        except TypeError:
            return NotImplemented
        return PowerSeries([s * c for c in self._c])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return mul(self, invert(other))
        s = to_fraction(other)
        return PowerSeries([c / s for c in self._c])

    def __rtruediv__(self, other):
        return self._coerce(other) * invert(self)

    def __pow__(self, k: int) -> "PowerSeries":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers; see pow_unit")
        result = PowerSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int = 1) -> "PowerSeries":
        """Multiply by ``q**k``, keeping the order."""
        if k < 0:
            raise ValueError("negative shift")
        kept = list(self._c[: max(0, len(self._c) - k)])
        return PowerSeries([Fraction(0)] * k + kept, self.order)

    def __call__(self, other: "PowerSeries") -> "PowerSeries":
        return compose(self, other)


def add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order) + 1
    return PowerSeries([a[i] + b[i] for i in range(n)])


def mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the smaller order."""
    D = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for d in range(D + 1):
        s = Fraction(0)
        for i in range(d + 1):
            x = ac[i]
            if x:
                y = bc[d - i]
                if y:
                    s += x * y
        out.append(s)
    return PowerSeries(out)


def invert(a: PowerSeries) -> PowerSeries:
    """Multiplicative inverse; the constant term must be non-zero."""
    if a[0] == 0:
        raise ZeroConstantTerm("cannot invert a series with zero constant term")
    inv0 = 1 / a[0]
    b = [inv0]
    for d in range(1, a.order + 1):
        s = sum((a[i] * b[d - i] for i in range(1, d + 1)), Fraction(0))
        b.append(-s * inv0)
    return PowerSeries(b)


def log_unit(a: PowerSeries) -> PowerSeries:
    """``log a`` for a series with constant term 1.

    Uses ``q L' = q a' / a``, i.e. ``d L_d = d a_d - sum_{k<d} k L_k a_{d-k}``.
    """
    if a[0] != 1:
        raise NotUnitOne(f"log needs constant term 1, got {a[0]}")
    L = [Fraction(0)]
    for d in range(1, a.order + 1):
        s = d * a[d]
        for k in range(1, d):
            s -= k * L[k] * a[d - k]
        L.append(s / d)
    return PowerSeries(L)


def exp_nilconst(a: PowerSeries) -> PowerSeries:
    """``exp a`` for a series with zero constant term.

    From ``E' = a' E``: ``d E_d = sum_{k=1}^{d} k a_k E_{d-k}``.
    """
    if a[0] != 0:
        raise NonzeroConstant(f"exp needs zero constant term, got {a[0]}")
    E = [Fraction(1)]
    for d in range(1, a.order + 1):
        s = Fraction(0)
        for k in range(1, d + 1):
            if a[k]:
                s += k * a[k] * E[d - k]
        E.append(s / d)
    return PowerSeries(E)


def pow_unit(a: PowerSeries, alpha) -> PowerSeries:
    """``a**alpha`` for rational ``alpha``, defined as ``exp(alpha log a)``."""
    return exp_nilconst(log_unit(a) * to_fraction(alpha))


def qddq(a: PowerSeries) -> PowerSeries:
    """The Euler operator ``q d/dq``: ``c_d -> d c_d``."""
    return PowerSeries([d * c for d, c in enumerate(a.coeffs)])


def integrate_over_x(a: PowerSeries) -> PowerSeries:
    """``int_0^q a(x)/x dx``; inverse of :func:`qddq` on series vanishing at 0."""
    if a[0] != 0:
        raise NonzeroConstant("integrand a(x)/x needs a(0) = 0")
    return PowerSeries([Fraction(0)] + [c / d for d, c in enumerate(a.coeffs) if d])


def compose(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """``a(b(q))`` by Horner's rule; ``b`` must vanish at 0."""
    if b[0] != 0:
        raise NonzeroConstant("inner series of a composition must vanish at 0")
    D = min(a.order, b.order)
    b = b.truncate(D)
    result = PowerSeries.constant(a[D], D)
    for k in range(D - 1, -1, -1):
        result = result * b + a[k]
    return result


def substitute_qexp(a: PowerSeries, g: PowerSeries) -> PowerSeries:
    """Evaluate ``a`` at ``q exp(g(q))``, i.e. ``sum_d c_d q^d e^{d g}``."""
    if g[0] != 0:
        raise NonzeroConstant("exponent series must vanish at 0")
    D = min(a.order, g.order)
    step = exp_nilconst(g.truncate(D)).shift(1)
    total = PowerSeries.constant(a[0], D)
    power = PowerSeries.one(D)
    for d in range(1, D + 1):
        power = power * step
        if a[d]:
            total = total + power * a[d]
    return total


def reversion(a: PowerSeries) -> PowerSeries:
    """Compositional inverse ``b`` with ``a(b(Q)) = Q``.

    Lagrange inversion: ``b_d = (1/d) [x^{d-1}] (x / a(x))^d``.
    """
    if a[0] != 0 or a.order < 1 or a[1] == 0:
        raise NotReversible("reversion needs a = a_1 q + ... with a_1 != 0")
    D = a.order
    h = invert(PowerSeries(a.coeffs[1:]))  # x / a(x), order D-1
    b = [Fraction(0)]
    power = PowerSeries.one(h.order)
    for d in range(1, D + 1):
        power = power * h
        b.append(power[d - 1] / d)
    return PowerSeries(b)


def from_strings(values: Sequence[str]) -> PowerSeries:
    return PowerSeries([Fraction(v) for v in values])
