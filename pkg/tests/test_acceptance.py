"""Acceptance gate: twelve criteria, all compared as exact rationals.

Run ``pytest tests/test_acceptance.py`` for one PASS/FAIL line per criterion
in the terminal summary, or ``python3 tests/test_acceptance.py`` standalone.
"""

import json
import random
import subprocess
import sys
from fractions import Fraction
from math import comb

import pytest

from qmpotential import GeometrySpec, compute_report
from qmpotential.cli import compute_payload, parse_args, to_json
from qmpotential.ifunction import expand_I, pf_check
from qmpotential.invariants import compute_Ck, diagnostics, quasimap_potential, vert_loop_consistency
from qmpotential.series import (
    PowerSeries,
    compose,
    exp_nilconst,
    integrate_over_x,
    log_unit,
    qddq,
    reversion,
)
from qmpotential.wallcross import euler_characteristic, nd_crosscheck

EXAMPLE = GeometrySpec(4, (2,), (2,))
CONIFOLD = GeometrySpec(2, (), (1, 1))
FIVE = (
    EXAMPLE,
    CONIFOLD,
    GeometrySpec(5, (5,), ()),
    GeometrySpec(3, (), (3,)),
    GeometrySpec(6, (2, 2), (2,)),
)
CASES = 100

RESULTS: dict[int, tuple[bool, str]] = {}


def F(x):
    return Fraction(x)


def head(series, lo, hi):
    return list(series.coeffs[lo:hi])


def criterion_1():
    rep = compute_report(EXAMPLE, 8)
    assert rep.I0 == PowerSeries.one(8)
    assert head(rep.I1, 1, 4) == [4, 18, F("400/3")]
    assert head(rep.I1, 1, 9) == [Fraction(comb(2 * d, d) ** 2, d) for d in range(1, 9)]
    return "I0 = 1, I1_d = binom(2d,d)^2 / d for d <= 8"


def criterion_2():
    rep = compute_report(EXAMPLE, 8)
    assert head(rep.C[1], 0, 4) == [1, 4, 36, 400]
    assert rep.C[1] == qddq(rep.I1) + 1
    return "C1 = 1 + 4q + 36q^2 + 400q^3 = 1 + q dI1/dq through q^8"


def criterion_3():
    rep = compute_report(EXAMPLE, 3)
    assert head(rep.F_qm, 0, 4) == [0, F("-2/3"), F("-10/3"), F("-224/9")]
    return "F_qm = -2/3, -10/3, -224/9"


def criterion_4():
    rep = compute_report(EXAMPLE, 3)
    assert head(rep.F_gw_q, 0, 4) == [0, F("-1/3"), F("-11/6"), F("-124/9")]
    return "F_gw(q) = -1/3, -11/6, -124/9"


def criterion_5():
    rep = compute_report(EXAMPLE, 6)
    assert list(rep.N[:3]) == [F("-1/3"), F("-1/2"), F("-10/9")]
    assert nd_crosscheck(rep.F_gw_q, rep.Q_of_q, rep.N)
    return "N1..N3 = -1/3, -1/2, -10/9, forward re-composition agrees"


def criterion_6():
    rep = compute_report(EXAMPLE, 10)
    assert head(rep.Q_of_q, 0, 4) == [0, 1, 4, 26]
    ident = PowerSeries.monomial(1, 10)
    assert compose(rep.Q_of_q, rep.q_of_Q) == ident
    assert compose(rep.q_of_Q, rep.Q_of_q) == ident
    return "Q = q + 4q^2 + 26q^3, reversion round trip through q^10"


def criterion_7():
    rep = compute_report(CONIFOLD, 10)
    closed = log_unit(PowerSeries([1, -1], 10)) * F("-1/12")
    assert rep.F_qm == closed and rep.F_gw_q == closed
    assert list(rep.N) == [Fraction(1, 12 * d) for d in range(1, 11)]
    return "conifold F = -(1/12) log(1-q), N_d = 1/(12d) for d <= 10"


def criterion_8():
    for spec in FIVE:
        assert pf_check(spec, expand_I(spec, 6, spec.n + 2)), spec.label()
    return "Picard-Fuchs annihilates I at D = 6 for all five specs"


def criterion_9():
    for spec in FIVE:
        C = compute_Ck(spec, 8)
        F_qm = quasimap_potential(spec, C, 8)
        assert vert_loop_consistency(spec, C, diagnostics(spec, C, 8), F_qm), spec.label()
    return "F_qm = vert + loop/2 through q^8 for all five specs"


def criterion_10():
    got = [
        euler_characteristic(GeometrySpec(5, (5,), ())),
        euler_characteristic(GeometrySpec(3, (3,), ())),
        euler_characteristic(GeometrySpec(4, (2, 2), ())),
    ]
    assert got == [-200, 0, 0]
    return "chi = -200, 0, 0"


def _random(rng, order, const):
    c = [Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(order + 1)]
    c[0] = Fraction(const)
    return PowerSeries(c)


def criterion_11():
    for spec in FIVE:
        assert not expand_I(spec, 5, spec.n).grading_violations(), spec.label()
        C = compute_Ck(spec, 6)
        assert all(c[0] == 1 for c in C.C), spec.label()
        L = diagnostics(spec, C, 6).L
        assert L**spec.n * PowerSeries([1, -spec.kappa], 6) == PowerSeries.one(6), spec.label()
    rng = random.Random(20261016)
    for _ in range(CASES):
        D = rng.randint(1, 8)
        g = _random(rng, D, 0)
        assert log_unit(exp_nilconst(g)) == g
        assert exp_nilconst(log_unit(g + 1)) == g + 1
    for _ in range(CASES):
        D = rng.randint(1, 8)
        a = _random(rng, D, 0)
        if a[1] == 0:
            a = a + PowerSeries.monomial(1, D)
        ident = PowerSeries.monomial(1, D)
        assert compose(a, reversion(a)) == ident and compose(reversion(a), a) == ident
    for _ in range(CASES):
        D = rng.randint(1, 8)
        g = _random(rng, D, 0)
        f = _random(rng, D, rng.randint(-5, 5))
        assert qddq(integrate_over_x(g)) == g
        assert integrate_over_x(qddq(f)) == f - f[0]
    return f"grading, C_k(0) = 1, L^n (1 - kappa q) = 1, {CASES} cases per round trip"


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "qmpotential", *args], capture_output=True)


def criterion_12():
    assert _cli("verify").returncode == 0
    for cmd in ("ifun", "ck", "potential", "gw"):
        proc = _cli(cmd, "--n", "4", "--l", "2", "--lp", "2", "--order", "4")
        assert proc.returncode == 0
        text = proc.stdout.decode("utf-8")
        assert to_json(json.loads(text)) == text
        assert text == to_json(compute_payload(parse_args([cmd, "--n", "4", "--l", "2", "--lp", "2", "--order", "4"])))
    assert _cli("gw", "--n", "4", "--order", "x").returncode == 2
    assert _cli("bogus").returncode == 2
    assert _cli("gw", "--n", "4", "--l", "2").returncode == 3
    return "verify exits 0, JSON byte-identical, exit 2/3 on bad input"


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 13)}


def evaluate(i: int) -> tuple[bool, str]:
    try:
        return True, CRITERIA[i]()
    except Exception as exc:
        return False, f"{type(exc).__name__}: {exc}"


def line(i: int, ok: bool, detail: str) -> str:
    return f"{'PASS' if ok else 'FAIL'} criterion {i}: {detail}"


@pytest.mark.parametrize("i", sorted(CRITERIA))
def test_criterion(i):
    ok, detail = evaluate(i)
    RESULTS[i] = (ok, detail)
    print(line(i, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [evaluate(i) for i in sorted(CRITERIA)]
    for i, (ok, detail) in zip(sorted(CRITERIA), results):
        print(line(i, ok, detail))
    sys.exit(0 if all(ok for ok, _ in results) else 1)
