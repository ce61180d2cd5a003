"""Command-line front end: compute terms, quaternions and spinors, expand
generating functions, and run the identity verification suite.

Exact values are rendered as decimal rationals (strings in JSON); only the
root-based closed forms produce floats, always with an explicit tolerance.
Exit codes: 0 all checks pass, 1 a verified identity failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .analytic import DegenerateRoots, binet_spinor, genfunc_spinor_series
from .gauss import GaussScalar
from .identities import (
    IdentityId,
    Status,
    VerificationReport,
    run_identity,
    run_suite,
)
from .quaternions import trib_quaternion
from .sequences import SeqParams, UnknownPreset, preset, seq_slice, seq_term
from .spinors import Spinor, trib_spinor


class CliError(Exception):
    """Bad command-line input; rendered to stderr with exit code 2."""


def render_json(payload: object) -> str:
    """Canonical JSON rendering; re-rendering parsed output is byte-stable."""
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _gauss_json(value: GaussScalar) -> dict[str, str]:
    return {"re": str(value.re), "im": str(value.im)}


def _spinor_json(s: Spinor) -> dict[str, dict[str, str]]:
    return {"c1": _gauss_json(s.c1), "c2": _gauss_json(s.c2)}


def _params_json(p: SeqParams | None) -> dict[str, str] | None:
    if p is None:
        return None
    return {name: str(getattr(p, name)) for name in ("r", "s", "t", "v0", "v1", "v2")}


def report_to_dict(r: VerificationReport) -> dict:
    out = {
        "identity": r.identity.value,
        "params": _params_json(r.params),
        "range": [r.span[0], r.span[1]],
        "status": r.status.value,
        "note": r.note,
    }
    if r.witness is not None:
        out["witness"] = {"n": r.witness.n, "lhs": r.witness.lhs, "rhs": r.witness.rhs}
    return out


def format_report(r: VerificationReport) -> str:
    line = f"{r.identity.value:<16} {r.status.value:<12} n=[{r.span[0]}..{r.span[1]}]"
    if r.note:
        line += f"  {r.note}"
    if r.witness is not None:
        line += f"\n  witness: n={r.witness.n} lhs={r.witness.lhs} rhs={r.witness.rhs}"
    return line


def _parse_params_csv(text: str) -> SeqParams:
    parts = [piece.strip() for piece in text.split(",")]
    if len(parts) != 6:
        raise CliError("--params expects six comma-separated values: r,s,t,V0,V1,V2")
    values = []
    for piece in parts:
        try:
            values.append(Fraction(piece))
        except (ValueError, ZeroDivisionError):
            raise CliError(f"invalid rational value in --params: {piece!r}") from None
    return SeqParams(*values)


def _resolve_params(args: argparse.Namespace) -> SeqParams:
    if getattr(args, "params", None):
        return _parse_params_csv(args.params)
    name = getattr(args, "preset", None) or "tribonacci"
    try:
        return preset(name)
    except UnknownPreset as exc:
        raise CliError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trispinor",
        description="Exact third-order recurrences, their quaternions and "
        "spinors, and machine-checked identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp: argparse.ArgumentParser) -> None:
        group = sp.add_mutually_exclusive_group()
        group.add_argument("--preset", metavar="NAME",
                           help="named parameter set (default: tribonacci)")
        group.add_argument("--params", metavar="CSV",
                           help="explicit r,s,t,V0,V1,V2 (integers or fractions like 3/2)")
        sp.add_argument("--json", action="store_true", help="emit JSON")

    p_term = sub.add_parser("term", help="sequence term V(n), or V(0..nmax)")
    add_common(p_term)
    which = p_term.add_mutually_exclusive_group(required=True)
    which.add_argument("-n", "--index", type=int)
    which.add_argument("--nmax", type=int)

    p_quat = sub.add_parser("quaternion", help="window quaternion at index n")
    add_common(p_quat)
    p_quat.add_argument("-n", "--index", type=int, required=True)

    p_spin = sub.add_parser("spinor", help="window spinor at index n")
    add_common(p_spin)
    p_spin.add_argument("-n", "--index", type=int, required=True)

    p_binet = sub.add_parser("binet", help="root-based closed-form spinor at index n")
    add_common(p_binet)
    p_binet.add_argument("-n", "--index", type=int, required=True)
    p_binet.add_argument("--tol", type=float, default=1e-9)

    p_gen = sub.add_parser("genfunc", help="generating-function series coefficients")
    add_common(p_gen)
    p_gen.add_argument("--order", type=int, default=8, metavar="N",
                       help="number of coefficients (default 8)")

    p_verify = sub.add_parser("verify", help="check one identity")
    add_common(p_verify)
    p_verify.add_argument("--identity", required=True,
                          choices=[i.value for i in IdentityId])
    p_verify.add_argument("--nmax", type=int, default=50)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--tol", type=float, default=1e-9)

    p_suite = sub.add_parser("suite", help="check every identity")
    add_common(p_suite)
    p_suite.add_argument("--nmax", type=int, default=50)
    p_suite.add_argument("--seed", type=int, default=0)
    p_suite.add_argument("--tol", type=float, default=1e-9)

    return parser


def _cmd_term(args: argparse.Namespace, out) -> int:
    p = _resolve_params(args)
    if args.index is not None:
        if args.index < 0:
            raise CliError("index must be nonnegative")
        value = seq_term(p, args.index)
        if args.json:
            out.write(render_json({"value": str(value)}))
        else:
            out.write(f"{value}\n")
    else:
        if args.nmax < 0:
            raise CliError("nmax must be nonnegative")
        values = seq_slice(p, 0, args.nmax + 1)
        if args.json:
            out.write(render_json({"values": [str(x) for x in values]}))
        else:
            for x in values:
                out.write(f"{x}\n")
    return 0


def _cmd_quaternion(args: argparse.Namespace, out) -> int:
    p = _resolve_params(args)
    if args.index < 0:
        raise CliError("index must be nonnegative")
    q = trib_quaternion(p, args.index).value
    if args.json:
        out.write(render_json({name: str(getattr(q, name))
                               for name in ("q0", "q1", "q2", "q3")}))
    else:
        out.write(f"{q}\n")
    return 0


def _cmd_spinor(args: argparse.Namespace, out) -> int:
    p = _resolve_params(args)
    if args.index < 0:
        raise CliError("index must be nonnegative")
    s = trib_spinor(p, args.index)
    if args.json:
        out.write(render_json(_spinor_json(s)))
    else:
        out.write(f"{s}\n")
    return 0


def _cmd_binet(args: argparse.Namespace, out) -> int:
    p = _resolve_params(args)
    if args.index < 0:
        raise CliError("index must be nonnegative")
    try:
        c1, c2 = binet_spinor(p, args.index)
    except DegenerateRoots as exc:
        raise CliError(f"DegenerateRoots: {exc}") from None
    if args.json:
        out.write(render_json({
            "c1": {"re": c1.real, "im": c1.imag},
            "c2": {"re": c2.real, "im": c2.imag},
            "tol": args.tol,
        }))
    else:
        out.write(f"[{c1:.12g}; {c2:.12g}]  (tol {args.tol:g})\n")
    return 0


def _cmd_genfunc(args: argparse.Namespace, out) -> int:
    p = _resolve_params(args)
    if args.order < 0:
        raise CliError("order must be nonnegative")
    series = genfunc_spinor_series(p, args.order)
    if args.json:
        out.write(render_json({
            "order": series.order,
            "coefficients": [_spinor_json(s) for s in series.coefficients],
        }))
    else:
        for k, s in enumerate(series.coefficients):
            out.write(f"{k}: {s}\n")
    return 0


def _exit_code(reports: list[VerificationReport]) -> int:
    return 1 if any(r.status is Status.FAIL for r in reports) else 0


def _cmd_verify(args: argparse.Namespace, out) -> int:
    p = _resolve_params(args)
    identity = IdentityId(args.identity)
    report = run_identity(identity, p, nmax=args.nmax, seed=args.seed, tol=args.tol)
    if args.json:
        out.write(render_json(report_to_dict(report)))
    else:
        out.write(format_report(report) + "\n")
    return _exit_code([report])


def _cmd_suite(args: argparse.Namespace, out) -> int:
    p = _resolve_params(args)
    reports = run_suite(p, nmax=args.nmax, seed=args.seed, tol=args.tol)
    if args.json:
        out.write(render_json([report_to_dict(r) for r in reports]))
    else:
        for report in reports:
            out.write(format_report(report) + "\n")
    return _exit_code(reports)


_COMMANDS = {
    "term": _cmd_term,
    "quaternion": _cmd_quaternion,
    "spinor": _cmd_spinor,
    "binet": _cmd_binet,
    "genfunc": _cmd_genfunc,
    "verify": _cmd_verify,
    "suite": _cmd_suite,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args, sys.stdout)
    except (CliError, ValueError) as exc:
        # ValueError covers range/tolerance preconditions of the library ops.
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
