"""Command-line front end.

Subcommands:
  gate    closed-form matrix, determinant, rotation axis and action table
  verify  randomized check of every identity; exit 1 on any failure
  dd      one dynamical-decoupling run
  sweep   dd over a uniform grid of one parameter, written as CSV
  weyl    Weyl, twistor and Clifford residuals at one momentum

Exit codes: 0 success, 1 failed check or write error, 2 usage error.
Output is deterministic: identical argv gives byte-identical output.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
from typing import Optional, Sequence

import numpy as np

from . import decoupling as dd
from .gates import GateFamily, allowed_kinds, gate, gate_action, rotation_axis
from .linalg import det2
from .spinors import BlochAngles, momentum_unit
from .verify import run_verify
from .weyl import (
    clifford_table,
    four_momentum_matrix,
    helicity_flip_phases,
    plane_wave,
    twistor_check,
    unitary_symmetry_check,
    weyl_block_residual,
    weyl_residual,
)

FAMILY_CHOICES = ("P1", "P2", "P3", "P4", "P1t", "P2t")
FORMATS = ("csv", "json", "pretty")
WEYL_TOL = 1e-12
CLIFFORD_TOL = 1e-14


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    # + 0.0 folds -0.0 into 0.0
    return "%.17g" % (float(x) + 0.0)


def cjson(z) -> list[float]:
    z = complex(z)
    return [z.real + 0.0, z.imag + 0.0]


def mjson(m) -> list:
    m = np.asarray(m)
    if np.iscomplexobj(m):
        return [[cjson(v) for v in row] for row in m]
    return [[float(v) + 0.0 for v in row] for row in m]


def pretty_complex(z) -> str:
    z = complex(z)
    return f"{z.real + 0.0:.12g}{z.imag + 0.0:+.12g}j"


def _emit_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(rows: Sequence[Sequence[str]]) -> str:
    return "".join(",".join(r) + "\n" for r in rows)


# ---------------------------------------------------------------- argument parsing


def _add_format(p: argparse.ArgumentParser, default: str = "pretty"):
    p.add_argument("--format", choices=FORMATS, default=default, help=f"output format (default: {default})")


def _add_angles(p: argparse.ArgumentParser):
    p.add_argument("--theta", type=float, default=0.0, help="polar angle in radians (default: 0)")
    p.add_argument("--phi", type=float, default=0.0, help="azimuthal angle in radians (default: 0)")
    p.add_argument("--degrees", action="store_true", help="read all angle flags in degrees")


def _add_family(p: argparse.ArgumentParser, choices=FAMILY_CHOICES, default: Optional[str] = "P1"):
    p.add_argument("--family", choices=choices, default=default, required=default is None)


def _add_cycle(p: argparse.ArgumentParser):
    _add_family(p, choices=FAMILY_CHOICES[:4])
    _add_angles(p)
    p.add_argument("--bath-theta", type=float, default=None, help="bath polar angle (default: --theta)")
    p.add_argument("--bath-phi", type=float, default=None, help="bath azimuth (default: --phi)")
    p.add_argument("--bath-mag", type=float, default=1.0, help="|B| (default: 1)")
    p.add_argument("--tau", type=float, default=1.0, help="free-evolution interval (default: 1)")
    p.add_argument("--cycles", type=int, default=1, help="number of cycles (default: 1)")
    p.add_argument("--pulse", choices=("ideal", "finite"), default="ideal")
    p.add_argument("--pulse-duration", type=float, default=None, help="finite pulse length")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blochgate", description="Coordinate-dependent NOT/parity gates")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gate", help="render a gate matrix and its action")
    _add_family(p, default=None)
    _add_angles(p)
    _add_format(p)

    p = sub.add_parser("verify", help="run the randomized identity suite")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=None, help="override every per-check tolerance")
    _add_format(p)

    p = sub.add_parser("dd", help="simulate a dynamical-decoupling run")
    _add_cycle(p)
    _add_format(p)

    p = sub.add_parser("sweep", help="sweep one decoupling parameter into a CSV file")
    _add_cycle(p)
    p.add_argument("--param", required=True, choices=dd.SWEEP_PARAMETERS)
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", dest="stop", type=float, required=True)
    p.add_argument("--steps", type=int, default=50)
    p.add_argument("--out", default=None, help="output path (default: stdout)")

    p = sub.add_parser("weyl", help="Weyl, twistor and Clifford residuals")
    p.add_argument("--energy", type=float, default=1.0)
    _add_angles(p)
    _add_family(p, choices=FAMILY_CHOICES[:4])
    _add_format(p)
    return parser


def _to_rad(value: Optional[float], degrees: bool) -> Optional[float]:
    if value is None:
        return None
    return math.radians(value) if degrees else value


def _angles(args) -> BlochAngles:
    return BlochAngles(_to_rad(args.theta, args.degrees), _to_rad(args.phi, args.degrees))


def _cycle_spec(args) -> dd.CycleSpec:
    a = _angles(args)
    bath_theta = a.theta if args.bath_theta is None else _to_rad(args.bath_theta, args.degrees)
    bath_phi = a.phi if args.bath_phi is None else _to_rad(args.bath_phi, args.degrees)
    if args.pulse == "finite":
        if args.pulse_duration is None:
            raise UsageError("--pulse finite requires --pulse-duration")
        pulse = dd.PulseModel(args.pulse_duration)
    else:
        pulse = dd.IDEAL
    bath = dd.BathSpec(args.bath_mag, BlochAngles(bath_theta, bath_phi))
    return dd.CycleSpec(GateFamily.parse(args.family), a, bath, args.tau, args.cycles, pulse)


# ---------------------------------------------------------------- commands


def cmd_gate(args, out: io.TextIOBase) -> int:
    f = GateFamily.parse(args.family)
    a = _angles(args)
    m = gate(f, a)
    det = det2(m)
    axis = rotation_axis(f, a) if f.is_rotation else None
    actions = [gate_action(f, k, a) for k in allowed_kinds(f)]

    if args.format == "json":
        out.write(
            _emit_json(
                {
                    "family": f.value,
                    "theta": a.theta,
                    "phi": a.phi,
                    "matrix": mjson(m),
                    "determinant": cjson(det),
                    "axis": None if axis is None else [float(v) + 0.0 for v in axis],
                    "actions": [
                        {"source": r.source.value, "target": r.target.value, "phase": cjson(r.phase), "residual": r.residual}
                        for r in actions
                    ],
                }
            )
        )
    elif args.format == "csv":
        rows = [["section", "key", "re", "im"]]
        for i in range(2):
            for j in range(2):
                rows.append(["matrix", f"{i}{j}", fmt(m[i, j].real), fmt(m[i, j].imag)])
        rows.append(["det", "", fmt(det.real), fmt(det.imag)])
        if axis is not None:
            rows.extend(["axis", c, fmt(v), fmt(0.0)] for c, v in zip("xyz", axis))
        rows.extend(["action", f"{r.source.value}->{r.target.value}", fmt(r.phase.real), fmt(r.phase.imag)] for r in actions)
        out.write(_csv(rows))
    else:
        lines = [f"{f.value} at theta={a.theta:.12g} phi={a.phi:.12g}", "matrix:"]
        for row in m:
            lines.append("  [" + ", ".join(pretty_complex(v) for v in row) + "]")
        lines.append(f"det: {pretty_complex(det)}")
        if axis is not None:
            lines.append("axis: (" + ", ".join(f"{v + 0.0:.12g}" for v in axis) + ")")
        lines.append("action:")
        for r in actions:
            lines.append(f"  {r.source.value} -> {pretty_complex(r.phase)} * {r.target.value}")
        out.write("\n".join(lines) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    if args.tol is not None and not args.tol > 0:
        raise UsageError("--tol must be positive")
    report = run_verify(args.samples, args.seed, args.tol)
    status = "PASS" if report.passed else "FAIL"

    if args.format == "json":
        out.write(
            _emit_json(
                {
                    "samples": args.samples,
                    "seed": args.seed,
                    "checks": [
                        {
                            "name": c.name,
                            "description": c.description,
                            "samples": c.samples,
                            "max_residual": c.max_residual,
                            "tol": c.tol,
                            "passed": c.passed,
                        }
                        for c in report.checks
                    ],
                    "p1_action_table": [
                        {"source": r.source, "target": r.target, "expected_phase": r.expected, "max_error": r.max_error, "passed": r.passed}
                        for r in report.table
                    ],
                    "status": status,
                }
            )
        )
    elif args.format == "csv":
        rows = [["section", "name", "samples", "max_residual", "tol", "status"]]
        rows.extend(
            ["check", c.name, str(c.samples), fmt(c.max_residual), fmt(c.tol), "pass" if c.passed else "fail"]
            for c in report.checks
        )
        rows.extend(
            ["p1_action_table", f"{r.source}->{r.target}", str(args.samples), fmt(r.max_error), fmt(r.tol), "pass" if r.passed else "fail"]
            for r in report.table
        )
        out.write(_csv(rows))
    else:
        lines = [f"verify: {args.samples} samples, seed {args.seed}"]
        for c in report.checks:
            mark = "ok  " if c.passed else "FAIL"
            lines.append(f"  {mark} {c.name:<26} max {c.max_residual:.3e}  tol {c.tol:.0e}  {c.description}")
        lines.append("P1 action table:")
        for r in report.table:
            mark = "ok  " if r.passed else "FAIL"
            lines.append(f"  {mark} {r.source:<8} -> {r.expected:>10} * {r.target:<8} max err {r.max_error:.3e}")
        lines.append(status)
        out.write("\n".join(lines) + "\n")
    return 0 if report.passed else 1


def cmd_dd(args, out) -> int:
    res = dd.dd_cycle(_cycle_spec(args))
    u = res.total_unitary
    if args.format == "json":
        out.write(_emit_json({"fidelity": res.fidelity, "residual": res.residual, "total_unitary": mjson(u)}))
    elif args.format == "csv":
        header = ["fidelity", "residual"] + [f"u{i}{j}_{part}" for i in range(2) for j in range(2) for part in ("re", "im")]
        values = [fmt(res.fidelity), fmt(res.residual)]
        values += [fmt(getattr(u[i, j], part)) for i in range(2) for j in range(2) for part in ("real", "imag")]
        out.write(_csv([header, values]))
    else:
        lines = [f"fidelity: {res.fidelity:.15g}", f"residual: {res.residual:.3e}", "total unitary:"]
        for row in u:
            lines.append("  [" + ", ".join(pretty_complex(v) for v in row) + "]")
        out.write("\n".join(lines) + "\n")
    return 0


def cmd_sweep(args, out) -> int:
    if args.steps < 2:
        raise UsageError("--steps must be at least 2")
    start, stop = args.start, args.stop
    if args.param in ("bath_theta", "bath_phi"):
        start, stop = _to_rad(start, args.degrees), _to_rad(stop, args.degrees)
    if not start < stop:
        raise UsageError("--from must be smaller than --to")
    spec = _cycle_spec(args)
    rows = [["param", "value", "fidelity", "residual"]]
    rows.extend([args.param, fmt(v), fmt(fid), fmt(res)] for v, fid, res in dd.sweep(spec, args.param, start, stop, args.steps))
    text = _csv(rows)
    if args.out is None:
        out.write(text)
        return 0
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"blochgate: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_weyl(args, out) -> int:
    if not args.energy > 0:
        raise UsageError("--energy must be positive")
    a = _angles(args)
    f = GateFamily.parse(args.family)
    e = args.energy
    fm = four_momentum_matrix(e, a)
    residuals = {
        "weyl_plus": weyl_residual(plane_wave(a, e, 1)),
        "weyl_minus": weyl_residual(plane_wave(a, e, -1)),
        "unitary_symmetry": unitary_symmetry_check(f, a),
    }
    residuals["twistor_plus"], residuals["twistor_minus"] = twistor_check(e, a, f)
    residuals["chiral_blocks"] = weyl_block_residual(e, e * momentum_unit(a))
    det_scaled = abs(fm.det()) / (2 * e) ** 2
    clifford = float(np.max(clifford_table()))
    lam, lam_prime = helicity_flip_phases(f, a)
    ok = all(v <= WEYL_TOL for v in residuals.values()) and det_scaled <= WEYL_TOL and clifford <= CLIFFORD_TOL

    if args.format == "json":
        out.write(
            _emit_json(
                {
                    "energy": e,
                    "theta": a.theta,
                    "phi": a.phi,
                    "family": f.value,
                    "sigma_dot_p": mjson(fm.m),
                    "det_sigma_dot_p": cjson(fm.det()),
                    "residuals": residuals,
                    "clifford_max_residual": clifford,
                    "lambda": cjson(lam.phase),
                    "lambda_prime": cjson(lam_prime.phase),
                    "status": "PASS" if ok else "FAIL",
                }
            )
        )
    elif args.format == "csv":
        rows = [["quantity", "re", "im"]]
        for i in range(2):
            for j in range(2):
                rows.append([f"sigma_dot_p_{i}{j}", fmt(fm.m[i, j].real), fmt(fm.m[i, j].imag)])
        rows.append(["det_sigma_dot_p", fmt(fm.det().real), fmt(fm.det().imag)])
        rows.extend([k, fmt(v), fmt(0.0)] for k, v in residuals.items())
        rows.append(["clifford_max_residual", fmt(clifford), fmt(0.0)])
        rows.append(["lambda", fmt(lam.phase.real), fmt(lam.phase.imag)])
        rows.append(["lambda_prime", fmt(lam_prime.phase.real), fmt(lam_prime.phase.imag)])
        out.write(_csv(rows))
    else:
        lines = [f"E={e:.12g} theta={a.theta:.12g} phi={a.phi:.12g} family={f.value}", "sigma.p:"]
        for row in fm.m:
            lines.append("  [" + ", ".join(pretty_complex(v) for v in row) + "]")
        lines.append(f"det(sigma.p): {pretty_complex(fm.det())}")
        for k, v in residuals.items():
            lines.append(f"{k}: {v:.3e}")
        lines.append(f"clifford: {'ok' if clifford <= CLIFFORD_TOL else 'FAIL'} (max {clifford:.3e})")
        lines.append(f"lambda: {pretty_complex(lam.phase)}  lambda': {pretty_complex(lam_prime.phase)}")
        lines.append("PASS" if ok else "FAIL")
        out.write("\n".join(lines) + "\n")
    return 0 if ok else 1


COMMANDS = {"gate": cmd_gate, "verify": cmd_verify, "dd": cmd_dd, "sweep": cmd_sweep, "weyl": cmd_weyl}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as exc:
        print(f"blochgate {args.command}: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
