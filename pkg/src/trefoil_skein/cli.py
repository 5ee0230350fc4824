"""Command-line front end.

Every command prints its report followed by one JSON summary line.  Exit
codes: 0 success, 1 verification failed, 2 parse/type error, 3 not found at
the search bound, 4 illegal specialization of ``t``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import ideal_lab as il
from .expr import ExprTypeError, ParseError, format_value, parse_value, value_from_json
from .quantum_torus import QTorusPoly, specialize_t
from .torus_skein import TorusSkein
from .trefoil_module import Chirality, ModuleElt, act, pi

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_NOT_FOUND, EXIT_ILLEGAL_T = 0, 1, 2, 3, 4


class _Report:
    def __init__(self, out):
        self.out = out
        self.summary: dict = {}

    def line(self, text: str = "") -> None:
        print(text, file=self.out)

    def finish(self, command: str, code: int, **extra) -> int:
        status = {EXIT_OK: "ok", EXIT_FAILED: "failed", EXIT_PARSE: "parse-error",
                  EXIT_NOT_FOUND: "not-found-at-bound", EXIT_ILLEGAL_T: "illegal-specialization"}[code]
        summary = {"command": command, "status": status, "exit": code}
        summary.update(self.summary)
        summary.update(extra)
        print(json.dumps(summary, sort_keys=True), file=self.out)
        return code


def _specialize(v, t0):
    if t0 is None:
        return v
    if isinstance(v, QTorusPoly):
        return specialize_t(v, t0)
    return v.specialize(t0)


def _t_value(args, generic_only: bool) -> Optional[Fraction]:
    if args.t_value is None:
        return None
    if generic_only:
        return il.check_t_value(args.t_value)
    t0 = Fraction(args.t_value)
    if t0 == 0:
        raise il.IllegalSpecialization("t = 0 is not allowed (Laurent coefficients)")
    return t0


# ---------------------------------------------------------------------------
# commands


def _cmd_mul(args, rep):
    t0 = _t_value(args, generic_only=False)
    v = parse_value(args.expr) if args.expr else None
    if v is None:
        raise ParseError("--expr is required", 1, 1)
    rep.line(format_value(_specialize(v, t0), args.format))
    return rep.finish("mul", EXIT_OK)


def _cmd_pi(args, rep):
    t0 = _t_value(args, generic_only=False)
    u = parse_value(args.expr, "skein")
    rep.line(format_value(_specialize(pi(u, args.chirality), t0), args.format))
    return rep.finish("pi", EXIT_OK)


def _cmd_act(args, rep):
    t0 = _t_value(args, generic_only=False)
    u = parse_value(args.expr, "skein")
    v = parse_value(args.on, "module")
    rep.line(format_value(_specialize(act(u, v, args.chirality), t0), args.format))
    return rep.finish("act", EXIT_OK)


def _cmd_kernel(args, rep):
    t0 = _t_value(args, generic_only=True)
    basis = il.kernel_basis(args.pmax, (args.qmin, args.qmax), args.chirality)
    for g in basis:
        rep.line(format_value(_specialize(g, t0), args.format))
    return rep.finish("kernel", EXIT_OK, dimension=len(basis))


def _read_gens(path: str) -> list:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc.msg}", exc.lineno, exc.colno) from exc
    if not isinstance(data, list) or not data:
        raise ParseError(f"{path} must hold a non-empty JSON array", 1, 1)
    try:
        gens = [value_from_json(obj) for obj in data]
    except (KeyError, ValueError, TypeError) as exc:
        raise ParseError(f"bad generator in {path}: {exc}", 1, 1) from exc
    kinds = {type(g) for g in gens}
    if len(kinds) != 1 or kinds & {ModuleElt}:
        raise ExprTypeError("generators must all be torus_skein or all qtorus elements")
    return gens


def _cmd_member(args, rep):
    _t_value(args, generic_only=True)
    gens = _read_gens(args.gens_file)
    if isinstance(gens[0], TorusSkein):
        target = parse_value(args.target, "skein")
        cert = il.skein_membership(target, gens, args.bound_p, args.bound_q)
    else:
        target = parse_value(args.target, "torus")
        cert = il.plane_membership(target, gens, args.bound_p, args.bound_q, laurent=args.laurent)
    bound = [args.bound_p, args.bound_q]
    if not cert:
        rep.line(f"not found at bound {tuple(bound)}")
        return rep.finish("member", EXIT_NOT_FOUND, bound=bound)
    if args.format == "json":
        rep.line(json.dumps(cert.to_json()))
    else:
        rep.line(f"found at bound {cert.bound}")
        for mlt, c, i in cert.combination:
            rep.line(f"  gen {i}: ({c}) * [{mlt}]")
    ok = cert.verify()
    rep.line("replay: exact" if ok else "replay: MISMATCH")
    return rep.finish("member", EXIT_OK if ok else EXIT_FAILED, bound=list(cert.bound))


def _cmd_aideal(args, rep):
    _t_value(args, generic_only=True)
    if args.action == "gens":
        gs = il.aideal_gens(args.chirality)
        for tag, g in zip(gs.provenance, gs.elements):
            rep.line(f"{tag} = {format_value(g, args.format)}")
        return rep.finish("aideal gens", EXIT_OK)
    try:
        c, k = il.verify_aideal_gen1(args.chirality)
    except il.VerificationError as exc:
        rep.line(str(exc))
        return rep.finish("aideal verify", EXIT_FAILED)
    rep.line(f"unit ({c}, {k}): contracted tau = {c}*t^{k} * generator 1")
    return rep.finish("aideal verify", EXIT_OK, unit=[str(c), k])


def _cmd_classical(args, rep):
    res = il.classical_common_factor(args.chirality)
    rep.line(str(res))
    rep.line(f"expanded: {res.product}")
    return rep.finish("classical", EXIT_OK, factor=str(res))


def _cmd_verify_all(args, rep):
    from .verification import run_all

    chir = None if args.chirality == "both" else Chirality(args.chirality)
    results = run_all(chir)
    width = max(len(r.name) for r in results)
    for r in results:
        rep.line(f"{'PASS' if r.ok else 'FAIL'}  {r.name:<{width}}  {r.detail}")
    failed = [r.name for r in results if not r.ok]
    return rep.finish("verify-all", EXIT_FAILED if failed else EXIT_OK,
                      passed=len(results) - len(failed), failed=failed)


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--chirality", choices=["left", "right"], default="left")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--t-value", dest="t_value", default=None,
                        help="specialize t to this rational number where legal")

    parser = argparse.ArgumentParser(prog="trefoil-skein", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mul", parents=[common], help="evaluate a product expression")
    p.add_argument("--expr", required=True)
    p = sub.add_parser("pi", parents=[common], help="image of a boundary skein in the knot complement")
    p.add_argument("--expr", required=True)
    p = sub.add_parser("act", parents=[common], help="action of a boundary skein on a module element")
    p.add_argument("--expr", required=True)
    p.add_argument("--on", default="y", help="module element acted on (default: y)")

    p = sub.add_parser("kernel", parents=[common], help="kernel of pi on a truncated span")
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--qmin", type=int, required=True)
    p.add_argument("--qmax", type=int, required=True)

    p = sub.add_parser("member", parents=[common], help="ideal-membership certificate search")
    p.add_argument("--target", required=True)
    p.add_argument("--gens-file", dest="gens_file", required=True)
    p.add_argument("--bound-p", dest="bound_p", type=int, default=2)
    p.add_argument("--bound-q", dest="bound_q", type=int, default=8)
    p.add_argument("--laurent", action="store_true", help="allow negative multiplier exponents (torus targets)")

    p = sub.add_parser("aideal", parents=[common], help="noncommutative A-ideal generators")
    p.add_argument("action", choices=["gens", "verify"])

    sub.add_parser("classical", parents=[common], help="classical common factor at t = -1")

    p = sub.add_parser("verify-all", help="replay every verification and print a pass/fail table")
    p.add_argument("--chirality", choices=["left", "right", "both"], default="both")
    p.add_argument("--t-value", dest="t_value", default=None)
    return parser


COMMANDS = {
    "mul": _cmd_mul, "pi": _cmd_pi, "act": _cmd_act, "kernel": _cmd_kernel,
    "member": _cmd_member, "aideal": _cmd_aideal, "classical": _cmd_classical,
    "verify-all": _cmd_verify_all,
}


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    """Run one command; returns the exit code."""
    out = out or sys.stdout
    rep = _Report(out)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_PARSE
    name = args.command
    try:
        if getattr(args, "t_value", None) is not None:
            try:
                Fraction(args.t_value)
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"--t-value: not a rational number: {args.t_value!r}", 1, 1) from exc
        if name == "verify-all" and args.t_value is not None:
            raise il.IllegalSpecialization("verify-all runs over symbolic t")
        return COMMANDS[name](args, rep)
    except (ParseError, ExprTypeError) as exc:
        rep.line(f"error: {exc}")
        return rep.finish(name, EXIT_PARSE)
    except il.IllegalSpecialization as exc:
        rep.line(f"error: {exc}")
        return rep.finish(name, EXIT_ILLEGAL_T)
    except il.VerificationError as exc:
        rep.line(f"verification failed: {exc}")
        return rep.finish(name, EXIT_FAILED)
    except OSError as exc:
        rep.line(f"error: {exc}")
        return rep.finish(name, EXIT_PARSE)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
