"""Command-line front end.

Usage::

    qmpotential gw --n 4 --l 2 --lp 2 --order 10
    qmpotential ck --n 2 --lp 1,1 --order 8 --format table
    qmpotential verify

Exit codes: 0 success, 1 internal failure, 2 usage error, 3 geometry
violating the Calabi-Yau condition.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .errors import InvalidSpec
from .ifunction import GeometrySpec, expand_I, extract_I0_I1
from .invariants import compute_Ck, diagnostics, quasimap_potential
from .series import PowerSeries
from .wallcross import PotentialReport, compute_report

COMMANDS = ("ifun", "ck", "potential", "gw", "verify")
FORMATS = ("json", "table")
DEFAULT_ORDER = 10
EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_GEOMETRY = 0, 1, 2, 3


class UsageError(Exception):
    exit_code = EXIT_USAGE


class GeometryError(UsageError):
    exit_code = EXIT_GEOMETRY


@dataclass(frozen=True)
class RunConfig:
    command: str
    spec: Optional[GeometrySpec]
    order: int = DEFAULT_ORDER
    format: str = "json"
    output_path: Optional[Path] = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _csv_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def order_cap() -> int:
    raw = os.environ.get("QM_ORDER_MAX", "64")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"QM_ORDER_MAX must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qmpotential", description="Elliptic quasimap and Gromov-Witten potentials.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--n", type=int, help="ambient projective space is P^(n-1)")
    p.add_argument("--l", type=_csv_ints, default=(), help="hypersurface degrees, e.g. 2,3")
    p.add_argument("--lp", type=_csv_ints, default=(), help="bundle degrees l'_b, e.g. 1,1")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER, help="q-order D")
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--out", type=Path, default=None, help="write here instead of stdout")
    return p


def parse_args(argv: Sequence[str]) -> RunConfig:
    ns = build_parser().parse_args(list(argv))
    if ns.order < 1:
        raise UsageError("--order must be at least 1")
    cap = order_cap()
    if ns.order > cap:
        raise UsageError(f"--order {ns.order} exceeds QM_ORDER_MAX={cap}")
    spec = None
    if ns.command != "verify":
        if ns.n is None:
            raise UsageError(f"{ns.command} needs --n")
        try:
            spec = GeometrySpec(ns.n, ns.l, ns.lp)
        except InvalidSpec as exc:
            raise GeometryError(
                f"invalid geometry: sum(l)+sum(lp) = {sum(ns.l) + sum(ns.lp)}, n = {ns.n}: {exc}"
            )
    return RunConfig(ns.command, spec, ns.order, ns.format, ns.out)


# -- payloads -----------------------------------------------------------------


def _s(series: PowerSeries) -> list[str]:
    return series.to_strings()


def report_payload(rep: PotentialReport) -> dict:
    diag = rep.diagnostics
    return {
        "spec": rep.spec.to_dict(),
        "order": rep.order,
        "I0": _s(rep.I0),
        "I1": _s(rep.I1),
        "C": [_s(c) for c in rep.C.C],
        "F_qm": _s(rep.F_qm),
        "F_gw_q": _s(rep.F_gw_q),
        "Q_of_q": _s(rep.Q_of_q),
        "N": [str(x) for x in rep.N],
        "chi_top": None if rep.chi_top is None else str(rep.chi_top),
        "chern_coeff": str(rep.chern_coeff),
        "diagnostics": {
            "L": _s(diag.L),
            "mu": _s(diag.mu),
            "R0": _s(diag.R0),
            "loop": _s(diag.loop),
        },
    }


def compute_payload(config: RunConfig) -> dict:
    spec, D = config.spec, config.order
    head = {"spec": spec.to_dict(), "order": D}
    if config.command == "ifun":
        I0, I1 = extract_I0_I1(expand_I(spec, D, 1))
        return {**head, "I0": _s(I0), "I1": _s(I1)}
    if config.command == "ck":
        return {**head, "C": [_s(c) for c in compute_Ck(spec, D).C]}
    if config.command == "potential":
        C = compute_Ck(spec, D)
        diag = diagnostics(spec, C, D)
        return {
            **head,
            "F_qm": _s(quasimap_potential(spec, C, D)),
            "diagnostics": {"L": _s(diag.L), "mu": _s(diag.mu), "R0": _s(diag.R0), "loop": _s(diag.loop)},
        }
    return report_payload(compute_report(spec, D))


def to_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# -- table format -------------------------------------------------------------


def _columns(payload: dict) -> list[tuple[str, list]]:
    cols = []
    for key in ("I0", "I1"):
        if key in payload:
            cols.append((key, payload[key]))
    for k, c in enumerate(payload.get("C", [])):
        cols.append((f"C{k}", c))
    for key in ("F_qm", "F_gw_q", "Q_of_q"):
        if key in payload:
            cols.append((key, payload[key]))
    if "N" in payload:
        cols.append(("N", [None] + list(payload["N"])))
    for key, vals in payload.get("diagnostics", {}).items():
        cols.append((key, vals))
    return cols


def to_table(payload: dict) -> str:
    spec = payload["spec"]
    lines = [
        f"# n = {spec['n']}",
        f"# l = {','.join(map(str, spec['l']))}",
        f"# lp = {','.join(map(str, spec['lp']))}",
        f"# order = {payload['order']}",
    ]
    for key in ("chern_coeff", "chi_top"):
        if key in payload:
            val = payload[key]
            lines.append(f"# {key} = {'-' if val is None else val}")
    cols = _columns(payload)
    header = ["d"] + [name for name, _ in cols]
    rows = [header]
    for d in range(payload["order"] + 1):
        rows.append([str(d)] + ["-" if vals[d] is None else vals[d] for _, vals in cols])
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    for r in rows:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> dict:
    """Inverse of :func:`to_table`, rebuilding the JSON payload."""
    meta: dict[str, str] = {}
    grid = []
    for line in text.splitlines():
        if line.startswith("#"):
            key, _, val = line[1:].partition("=")
            meta[key.strip()] = val.strip()
        elif line.strip():
            grid.append(line.split())
    header, body = grid[0], grid[1:]
    ints = lambda s: [int(x) for x in s.split(",")] if s else []
    out: dict = {
        "spec": {"n": int(meta["n"]), "l": ints(meta["l"]), "lp": ints(meta["lp"])},
        "order": int(meta["order"]),
    }
    for key in ("chern_coeff", "chi_top"):
        if key in meta:
            out[key] = None if meta[key] == "-" else meta[key]
    column = {name: [row[i] for row in body] for i, name in enumerate(header)}
    C = []
    diag = {}
    for name in header[1:]:
        vals = column[name]
        if name == "N":
            out["N"] = vals[1:]
        elif name[0] == "C" and name[1:].isdigit():
            C.append(vals)
        elif name in ("L", "mu", "R0", "loop"):
            diag[name] = vals
        else:
            out[name] = vals
    if C:
        out["C"] = C
    if diag:
        out["diagnostics"] = diag
    return out


# -- driver -------------------------------------------------------------------


def _emit(text: str, path: Optional[Path]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text, encoding="utf-8")


def run(config: RunConfig) -> int:
    if config.command == "verify":
        from .verify import run_all

        checks = run_all()
        text = "\n".join(c.line() for c in checks) + "\n"
        failed = sum(not c.ok for c in checks)
        text += f"{len(checks) - failed}/{len(checks)} checks passed\n"
        _emit(text, config.output_path)
        return EXIT_OK if not failed else EXIT_INTERNAL
    payload = compute_payload(config)
    text = to_json(payload) if config.format == "json" else to_table(payload)
    _emit(text, config.output_path)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        config = parse_args(argv)
    except UsageError as exc:
        print(f"qmpotential: error: {exc}", file=sys.stderr)
        return exc.exit_code
    try:
        return run(config)
    except Exception as exc:
        print(f"qmpotential: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
