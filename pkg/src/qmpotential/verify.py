"""Built-in golden checks run by ``qmpotential verify``.

Each check returns a :class:`Check`; the CLI prints one line per check and
exits non-zero if any failed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterator

from .ifunction import GeometrySpec, expand_I, pf_check
from .invariants import compute_Ck, diagnostics, quasimap_potential, vert_loop_consistency
from .series import (
    PowerSeries,
    compose,
    exp_nilconst,
    integrate_over_x,
    log_unit,
    qddq,
    reversion,
)
from .wallcross import compute_report, euler_characteristic, nd_crosscheck

EXAMPLE = GeometrySpec(4, (2,), (2,))
CONIFOLD = GeometrySpec(2, (), (1, 1))
PF_MATRIX = (
    EXAMPLE,
    CONIFOLD,
    GeometrySpec(5, (5,), ()),
    GeometrySpec(3, (), (3,)),
    GeometrySpec(6, (2, 2), (2,)),
)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        return f"{tag}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def _series(*vals) -> list[Fraction]:
    return [Fraction(v) for v in vals]


def _check(name: str, fn: Callable[[], tuple[bool, str] | bool]) -> Check:
    try:
        out = fn()
    except Exception as exc:  # a crashing check is a failed check
        return Check(name, False, f"{type(exc).__name__}: {exc}")
    if isinstance(out, tuple):
        return Check(name, *out)
    return Check(name, bool(out))


def random_series(rng: random.Random, order: int, const=None) -> PowerSeries:
    c = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(order + 1)]
    if const is not None:
        c[0] = Fraction(const)
    return PowerSeries(c)


def run_checks(seed: int = 0, cases: int = 20) -> Iterator[Check]:
    rep = compute_report(EXAMPLE, 8)

    def i_function():
        exp = _series(0, *(Fraction(comb(2 * d, d) ** 2, d) for d in range(1, 9)))
        return rep.I0 == PowerSeries.one(8) and list(rep.I1.coeffs) == exp

    yield _check("example I0 = 1, I1 = sum C(2d,d)^2 q^d / d", i_function)
    yield _check(
        "example C1 = 1 + 4q + 36q^2 + 400q^3 = 1 + q dI1/dq",
        lambda: rep.C[1] == qddq(rep.I1) + 1 and list(rep.C[1].coeffs[:4]) == _series(1, 4, 36, 400),
    )
    yield _check(
        "example quasimap potential -2/3, -10/3, -224/9",
        lambda: list(rep.F_qm.coeffs[:4]) == _series(0, "-2/3", "-10/3", "-224/9"),
    )
    yield _check(
        "example GW potential in q -1/3, -11/6, -124/9",
        lambda: list(rep.F_gw_q.coeffs[:4]) == _series(0, "-1/3", "-11/6", "-124/9"),
    )
    yield _check(
        "example N1..N3 = -1/3, -1/2, -10/9 with forward cross-check",
        lambda: list(rep.N[:3]) == _series("-1/3", "-1/2", "-10/9")
        and nd_crosscheck(rep.F_gw_q, rep.Q_of_q, rep.N),
    )

    def mirror():
        r10 = compute_report(EXAMPLE, 10)
        ident = PowerSeries.monomial(1, 10)
        return (
            list(r10.Q_of_q.coeffs[:4]) == _series(0, 1, 4, 26)
            and compose(r10.Q_of_q, r10.q_of_Q) == ident
        )

    yield _check("mirror map q + 4q^2 + 26q^3, reversion round trip to order 10", mirror)

    def conifold():
        r = compute_report(CONIFOLD, 10)
        target = log_unit(PowerSeries([1, -1], 10)) * Fraction(-1, 12)
        return (
            r.F_qm == target
            and r.F_gw_q == target
            and list(r.N) == [Fraction(1, 12 * d) for d in range(1, 11)]
        )

    yield _check("conifold F = -(1/12) log(1-q), N_d = 1/(12d)", conifold)

    for spec in PF_MATRIX:
        yield _check(
            f"Picard-Fuchs annihilates I for {spec.label()}",
            lambda spec=spec: pf_check(spec, expand_I(spec, 6, spec.n + 2)),
        )
    for spec in PF_MATRIX:

        def vl(spec=spec):
            C = compute_Ck(spec, 8)
            return vert_loop_consistency(
                spec, C, diagnostics(spec, C, 8), quasimap_potential(spec, C, 8)
            )

        yield _check(f"vertex + loop reproduces the potential for {spec.label()}", vl)

    yield _check(
        "Euler characteristics -200, 0, 0",
        lambda: [
            euler_characteristic(GeometrySpec(5, (5,), ())),
            euler_characteristic(GeometrySpec(3, (3,), ())),
            euler_characteristic(GeometrySpec(4, (2, 2), ())),
        ]
        == [-200, 0, 0],
    )

    def structure():
        for spec in PF_MATRIX:
            if expand_I(spec, 5, spec.n).grading_violations():
                return False, f"grading broken for {spec.label()}"
            C = compute_Ck(spec, 6)
            if any(c[0] != 1 for c in C.C):
                return False, f"C_k(0) != 1 for {spec.label()}"
            L = diagnostics(spec, C, 6).L
            if L**spec.n * PowerSeries([1, -spec.kappa], 6) != PowerSeries.one(6):
                return False, f"L^n (1 - kappa q) != 1 for {spec.label()}"
        return True

    yield _check("grading, C_k(0) = 1, L^n (1 - kappa q) = 1", structure)

    def roundtrips():
        rng = random.Random(seed)
        for _ in range(cases):
            D = rng.randint(1, 7)
            g = random_series(rng, D, 0)
            f = random_series(rng, D, 1)
            if log_unit(exp_nilconst(g)) != g or exp_nilconst(log_unit(f)) != f:
                return False, "exp/log"
            if qddq(integrate_over_x(g)) != g or integrate_over_x(qddq(f)) != f - f[0]:
                return False, "qddq/integrate"
            a = random_series(rng, D, 0)
            if a[1] == 0:
                a = a + PowerSeries.monomial(1, D)
            if compose(a, reversion(a)) != PowerSeries.monomial(1, D):
                return False, "reversion"
        return True

    yield _check(f"series round trips on {cases} random inputs", roundtrips)

    def json_roundtrip():
        import json

        from .cli import parse_table, report_payload, to_json, to_table

        payload = report_payload(compute_report(EXAMPLE, 5))
        text = to_json(payload)
        return to_json(json.loads(text)) == text and parse_table(to_table(payload)) == payload

    yield _check("JSON byte round trip and table/JSON agreement", json_roundtrip)


def run_all(seed: int = 0, cases: int = 20, extra: Iterator[Check] = ()) -> list[Check]:
    out = list(run_checks(seed, cases))
    out.extend(extra)
    return out
