"""Arithmetic in ``R = Q[H]/(H^n - 1)`` and in truncated ``R[[q]]((w))``.

:class:`HPoly` is a dense element of ``R``.  :class:`IExpansion` is a table
``c[d][j]`` of ``HPoly`` coefficients of ``q^d w^j`` where ``w = 1/z``; it
holds the specialized I-function and the iterates ``B_k`` built from it.

Window convention for :class:`IExpansion`: slots ``j < wmin`` are exactly
zero, slots ``wmin <= j <= wmax`` are stored, slots ``j > wmax`` are unknown.
Multiplying by ``z`` moves every slot one step down in ``j``, so it lowers
both ends of the window.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, OutOfWindow, WindowExhausted
from .series import PowerSeries, to_fraction

__all__ = [
    "HPoly",
    "IExpansion",
    "hpoly_mul",
    "iexp_mul_scalar_series",
    "apply_H_plus_zqddq",
    "extract_Hk_at_w0",
]

_ZERO = Fraction(0)


class HPoly:
    """Element ``sum_a c_a H^a`` of ``Q[H]/(H^n - 1)``."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Iterable = ()):
        if n < 1:
            raise ValueError("n must be positive")
        c = [to_fraction(x) for x in coeffs]
        if len(c) > n:
            # reduce an ordinary polynomial with H^n = 1
            folded = [_ZERO] * n
            for a, x in enumerate(c):
                folded[a % n] += x
            c = folded
        c.extend([_ZERO] * (n - len(c)))
        self.n = n
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls, n: int) -> "HPoly":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "HPoly":
        return cls(n, [1])

    @classmethod
    def H(cls, n: int, power: int = 1, coeff=1) -> "HPoly":
        c = [_ZERO] * n
        c[power % n] = to_fraction(coeff)
        return cls(n, c)

    def __getitem__(self, a: int) -> Fraction:
        return self.coeffs[a % self.n]

    def __eq__(self, other) -> bool:
        if isinstance(other, HPoly):
            return self.n == other.n and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.coeffs))

    def __repr__(self) -> str:
        return f"HPoly({self.n}, [{', '.join(str(c) for c in self.coeffs)}])"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> list[int]:
        return [a for a, c in enumerate(self.coeffs) if c]

    def _check(self, other: "HPoly") -> None:
        if self.n != other.n:
            raise DimensionMismatch(f"H-degrees differ: {self.n} vs {other.n}")

    def __add__(self, other: "HPoly") -> "HPoly":
        self._check(other)
        return HPoly(self.n, [x + y for x, y in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "HPoly") -> "HPoly":
        self._check(other)
        return HPoly(self.n, [x - y for x, y in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "HPoly":
        return HPoly(self.n, [-x for x in self.coeffs])

    def scale(self, s) -> "HPoly":
        s = to_fraction(s)
        if s == 1:
            return self
        return HPoly(self.n, [s * x for x in self.coeffs])

    def times_H(self, k: int = 1) -> "HPoly":
        """Multiply by ``H**k``: a cyclic rotation of the coefficients."""
        k %= self.n
        if not k:
            return self
        c = self.coeffs
        return HPoly(self.n, c[-k:] + c[:-k])

    def __mul__(self, other):
        if isinstance(other, HPoly):
            return hpoly_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__


def hpoly_mul(a: HPoly, b: HPoly) -> HPoly:
    """Cyclic convolution, i.e. the product modulo ``H^n - 1``."""
    a._check(b)
    n = a.n
    out = [_ZERO] * n
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in enumerate(b.coeffs):
            if y:
                out[(i + j) % n] += x * y
    return HPoly(n, out)


class IExpansion:
    """Truncated element of ``R[[q]]`` tensored with a Laurent window in ``w``.

    Parameters
    ----------
    n : int
        The ring is ``Q[H]/(H^n - 1)``.
    table : sequence of sequences of HPoly
        ``table[d][j - wmin]`` is the coefficient of ``q^d w^j``.
    wmin : int
        Lowest stored ``w``-exponent.
    grade : int
        Declared grade shift ``k0``: the ``H^a`` coefficient of ``q^d w^j``
        may be non-zero only when ``a = j + k0 (mod n)``.
    """

    __slots__ = ("n", "table", "wmin", "grade")

    def __init__(self, n: int, table: Sequence[Sequence[HPoly]], wmin: int = 0, grade: int = 0):
        if not table or not table[0]:
            raise ValueError("empty expansion")
        width = len(table[0])
        if any(len(row) != width for row in table):
            raise ValueError("ragged w-window")
        self.n = n
        self.table = tuple(tuple(row) for row in table)
        self.wmin = wmin
        self.grade = grade % n

    @classmethod
    def constant(cls, n: int, value: HPoly, qorder: int, wmax: int = 0, grade: int = 0) -> "IExpansion":
        """``value * q^0 w^0`` with slots ``0..wmax`` and q-order ``qorder``."""
        zero = HPoly.zero(n)
        rows = []
        for d in range(qorder + 1):
            row = [zero] * (wmax + 1)
            if d == 0:
                row[0] = value
            rows.append(row)
        return cls(n, rows, 0, grade)

    @property
    def qorder(self) -> int:
        return len(self.table) - 1

    @property
    def wmax(self) -> int:
        return self.wmin + len(self.table[0]) - 1

    def slot(self, d: int, j: int) -> HPoly:
        """Coefficient of ``q^d w^j``."""
        if not 0 <= d <= self.qorder:
            raise OutOfWindow(f"q-degree {d} outside 0..{self.qorder}")
        if j > self.wmax:
            raise OutOfWindow(f"w-exponent {j} above the known window (wmax={self.wmax})")
        if j < self.wmin:
            return HPoly.zero(self.n)
        return self.table[d][j - self.wmin]

    def coefficient_series(self, power: int, j: int) -> PowerSeries:
        """The q-series of the ``H^power`` coefficient at ``w^j``."""
        return PowerSeries([self.slot(d, j)[power] for d in range(self.qorder + 1)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, IExpansion):
            return NotImplemented
        return (
            self.n == other.n
            and self.wmin == other.wmin
            and self.grade == other.grade
            and self.table == other.table
        )

    def __repr__(self) -> str:
        return (
            f"IExpansion(n={self.n}, qorder={self.qorder}, "
            f"w=[{self.wmin}, {self.wmax}], grade={self.grade})"
        )

    def restrict(self, qorder: int, wmax: int) -> "IExpansion":
        if qorder > self.qorder or wmax > self.wmax:
            raise OutOfWindow("restriction must shrink the window")
        if wmax < self.wmin:
            raise OutOfWindow("restriction leaves no stored slot")
        width = wmax - self.wmin + 1
        return IExpansion(self.n, [row[:width] for row in self.table[: qorder + 1]], self.wmin, self.grade)

    def trimmed(self) -> "IExpansion":
        """Drop leading all-zero w-slots (they are implied zeros anyway)."""
        width = len(self.table[0])
        k = 0
        while k < width - 1 and all(row[k].is_zero() for row in self.table):
            k += 1
        if k == 0:
            return self
        return IExpansion(self.n, [row[k:] for row in self.table], self.wmin + k, self.grade)

    def grading_violations(self) -> list[tuple[int, int, int]]:
        """All ``(d, j, a)`` with a non-zero ``H^a`` off the residue class."""
        bad = []
        for d, row in enumerate(self.table):
            for off, h in enumerate(row):
                j = self.wmin + off
                for a in h.support():
                    if (a - j - self.grade) % self.n:
                        bad.append((d, j, a))
        return bad

    # -- linear structure ---------------------------------------------------

    def _aligned(self, other: "IExpansion"):
        if self.n != other.n:
            raise DimensionMismatch(f"H-degrees differ: {self.n} vs {other.n}")
        D = min(self.qorder, other.qorder)
        lo = min(self.wmin, other.wmin)
        hi = min(self.wmax, other.wmax)
        if hi < lo:
            raise WindowExhausted("operands share no known w-slot")
        return D, lo, hi

    def __add__(self, other: "IExpansion") -> "IExpansion":
        D, lo, hi = self._aligned(other)
        rows = [
            [self.slot(d, j) + other.slot(d, j) for j in range(lo, hi + 1)]
            for d in range(D + 1)
        ]
        return IExpansion(self.n, rows, lo, self.grade)

    def __neg__(self) -> "IExpansion":
        return IExpansion(self.n, [[-h for h in row] for row in self.table], self.wmin, self.grade)

    def __sub__(self, other: "IExpansion") -> "IExpansion":
        return self + (-other)

    def scale(self, s) -> "IExpansion":
        s = to_fraction(s)
        return IExpansion(self.n, [[h.scale(s) for h in row] for row in self.table], self.wmin, self.grade)

    def times_H(self, k: int = 1) -> "IExpansion":
        return IExpansion(
            self.n, [[h.times_H(k) for h in row] for row in self.table], self.wmin, self.grade + k
        )

    def times_z(self) -> "IExpansion":
        """Multiply by ``z = 1/w``; the w^0 slot must stay known."""
        if self.wmax - 1 < 0:
            raise WindowExhausted("multiplying by z would lose the w^0 slot")
        return IExpansion(self.n, self.table, self.wmin - 1, self.grade + 1)

    def times_q(self) -> "IExpansion":
        zero_row = [HPoly.zero(self.n)] * len(self.table[0])
        return IExpansion(self.n, [zero_row] + list(self.table[:-1]), self.wmin, self.grade)


def iexp_mul_scalar_series(a: IExpansion, s: PowerSeries) -> IExpansion:
    """Multiply every w-slot of ``a`` by the scalar q-series ``s``."""
    D = min(a.qorder, s.order)
    width = len(a.table[0])
    zero = HPoly.zero(a.n)
    rows = []
    for d in range(D + 1):
        row = []
        for off in range(width):
            acc = zero
            for e in range(d + 1):
                c = s[e]
                if c:
                    h = a.table[d - e][off]
                    if not h.is_zero():
                        acc = acc + h.scale(c)
            row.append(acc)
        rows.append(row)
    return IExpansion(a.n, rows, a.wmin, a.grade)


def apply_H_plus_zqddq(a: IExpansion) -> IExpansion:
    """Apply ``H + z q d/dq``.

    ``result[d][j] = H a[d][j] + d a[d][j+1]``; the window becomes
    ``[wmin - 1, wmax - 1]`` (then leading zero slots are trimmed) and the
    grade shift increases by one.
    """
    if a.wmax - 1 < 0:
        raise WindowExhausted("no w-headroom left: the w^0 slot would become unknown")
    lo, hi = a.wmin - 1, a.wmax - 1
    rows = []
    for d in range(a.qorder + 1):
        row = []
        for j in range(lo, hi + 1):
            h = a.slot(d, j).times_H(1)
            if d:
                up = a.slot(d, j + 1)
                if not up.is_zero():
                    h = h + up.scale(d)
            row.append(h)
        rows.append(row)
    return IExpansion(a.n, rows, lo, a.grade + 1).trimmed()


def extract_Hk_at_w0(a: IExpansion, k: int) -> PowerSeries:
    """q-series of the ``H^k`` coefficient in the ``w^0`` slot."""
    if not 0 <= k < a.n:
        raise OutOfWindow(f"H-power {k} outside 0..{a.n - 1}")
    return a.coefficient_series(k, 0)
