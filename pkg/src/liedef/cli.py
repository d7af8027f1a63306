"""Command line front end.

Exit codes: 0 success, 1 negative verdict, 2 invalid input, 3 unsupported
case.  Reports go to standard output (``--json`` for machine-readable
output), diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
import time
from pathlib import Path

import numpy as np
from scipy.linalg import expm

from . import __version__
from .errors import InvalidInput, LieDefError, NoRealEigenvalue
from .exact import RatMatrix, parse_rational
from .groups import (DEFINABLE, INVALID_PRESENTATION, GroupPresentation, catalog,
                     catalog_entry, classify_group, presentation_from_json,
                     validate_presentation)
from .liealg import (algebra_from_json, derived_series, element_from_json, is_nilpotent,
                     loads_json, lower_central_series, nilpotency_class)
from .selftest import run_selftest
from .solvclass import (COMPLETELY_SOLVABLE, DEFAULT_NUMERIC_TOL, EXACT, NOT_SOLVABLE, NUMERIC,
                        check_flag, is_completely_solvable, sampled_eigenvalue_check, search_flag)
from .triangular import (DEFAULT_LOG_TOL, exp_triangular, faithful_triangular_rep,
                         log_triangular_positive)

STATUS = {0: "ok", 1: "negative", 2: "invalid", 3: "unsupported"}


class Outcome:
    def __init__(self, code: int, result: dict, lines: list[str]):
        self.code = code
        self.result = result
        self.lines = lines


class Context:
    def __init__(self, args):
        self.args = args
        self.input = None
        self.mode = EXACT
        self.tol = None

    def read(self, path: str):
        try:
            raw = Path(path).read_bytes()
        except OSError as exc:
            raise InvalidInput(f"cannot read {path}: {exc.strerror}", field="FILE") from None
        self.input = {"path": path, "sha256": hashlib.sha256(raw).hexdigest()}
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError:
            raise InvalidInput("file is not UTF-8 text", field="FILE") from None
        return loads_json(text)

    def algebra(self, path: str):
        return algebra_from_json(self.read(path))


def _matrix_arg(text: str, exact: bool):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"--matrix is not JSON: {exc.msg}", field="--matrix") from None
    if exact:
        return RatMatrix.from_json(data, field="--matrix")
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise InvalidInput("--matrix must be a list of rows", field="--matrix")
    try:
        rows = [[float(parse_rational(x)) if isinstance(x, str) else float(x) for x in r]
                for r in data]
        a = np.array(rows, dtype=float)
    except (TypeError, ValueError):
        raise InvalidInput("--matrix entries must be numbers", field="--matrix") from None
    if a.ndim != 2:
        raise InvalidInput("--matrix rows must have equal length", field="--matrix")
    return a


def _verdict_word(kind: str) -> str:
    good = kind in (COMPLETELY_SOLVABLE, DEFINABLE, "ok")
    if os.environ.get("NO_COLOR") is not None or not sys.stdout.isatty():
        return kind
    return f"\x1b[{32 if good else 31}m{kind}\x1b[0m"


def _float_rows(a) -> list[str]:
    return ["  [" + ", ".join(f"{x: .6g}" for x in row) + "]" for row in np.asarray(a)]


# ---------------------------------------------------------------------------
# subcommands

def cmd_validate(ctx: Context) -> Outcome:
    data = ctx.read(ctx.args.file)
    if isinstance(data, dict) and "f" in data:
        p = presentation_from_json(data)
        certs = validate_presentation(p)
        return Outcome(0, {"kind": "presentation", "valid": True, "dim": p.f.dim,
                           "torus_rank": p.torus_rank, "certificates": certs},
                       [f"valid presentation: dim f = {p.f.dim}, torus rank {p.torus_rank}"])
    g = algebra_from_json(data)
    return Outcome(0, {"kind": "algebra", "valid": True, "name": g.name, "dim": g.dim,
                       "basis": list(g.basis_names)},
                   [f"valid Lie algebra {g.name or '(unnamed)'} of dimension {g.dim} "
                    "(Jacobi identity holds)"])


def cmd_classify(ctx: Context) -> Outcome:
    g = ctx.algebra(ctx.args.file)
    v = is_completely_solvable(g)
    res = v.to_json()
    res["solvable"] = v.kind != NOT_SOLVABLE
    res["nilpotent"] = is_nilpotent(g)
    if res["nilpotent"]:
        res["nilpotency_class"] = nilpotency_class(g)
    res["derived_series_dims"] = [s.dim for s in derived_series(g)]
    res["lower_central_series_dims"] = [s.dim for s in lower_central_series(g)]
    lines = [f"{g.name or 'algebra'}: {_verdict_word(v.kind)}"]
    if res["solvable"]:
        sample = sampled_eigenvalue_check(g, ctx.args.samples, ctx.args.seed)
        res["sampling"] = sample.to_json()
        lines.append(f"sampled check ({sample.samples} elements, seed {sample.seed}): "
                     f"{'all spectra real' if sample.ok else 'non-real spectrum found'}")
    if v.witness is not None:
        w = v.witness
        lines.append(f"witness: ad({w.name}) has char poly {w.char_poly}, "
                     f"factor {w.nonreal_factor} with {w.deficit} non-real roots")
    return Outcome(0 if v.kind == COMPLETELY_SOLVABLE else 1, res, lines)


def cmd_flag(ctx: Context) -> Outcome:
    g = ctx.algebra(ctx.args.file)
    ctx.mode = NUMERIC if ctx.args.numeric else EXACT
    if ctx.mode == NUMERIC:
        ctx.tol = ctx.args.tol if ctx.args.tol is not None else DEFAULT_NUMERIC_TOL
    v = is_completely_solvable(g)
    if v.kind == NOT_SOLVABLE:
        return Outcome(1, {"found": False, "verdict": v.to_json()}, ["algebra is not solvable"])
    try:
        flag = search_flag(g, ctx.mode, ctx.tol or DEFAULT_NUMERIC_TOL)
    except NoRealEigenvalue as exc:
        return Outcome(1, {"found": False, "certificate": exc.to_json()},
                       [f"no complete flag: {exc}"])
    res = {"found": True, "verified": check_flag(g, flag), "flag": flag.to_json()}
    lines = [f"complete flag ({flag.mode}), verified: {res['verified']}"]
    if flag.mode == EXACT:
        lines += [f"  g_{i} = span{s.to_json()}" for i, s in enumerate(flag.subspaces)]
    else:
        lines.append(f"  max ideal residual {max(flag.residuals, default=0.0):.2e}")
    return Outcome(0, res, lines)


def cmd_embed(ctx: Context) -> Outcome:
    g = ctx.algebra(ctx.args.file)
    rep = faithful_triangular_rep(g)
    lines = [f"tier {rep.tier}, {rep.target_dim}x{rep.target_dim} upper triangular, "
             f"faithful: {rep.is_faithful}"]
    for name, m in zip(g.basis_names, rep.matrices):
        lines.append(f"  rho({name}) = {m.to_json()}")
    return Outcome(0, rep.to_json(), lines)


def _exp_input(ctx: Context, g, exact: bool):
    if ctx.args.element is not None:
        try:
            data = json.loads(ctx.args.element)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"--element is not JSON: {exc.msg}", field="--element") from None
        xi = element_from_json(g, data, field="--element")
        m = faithful_triangular_rep(g).image(xi)
        return m if exact else m.to_float()
    if ctx.args.matrix is None:
        raise InvalidInput("give --matrix or --element", field="--matrix")
    return _matrix_arg(ctx.args.matrix, exact)


def cmd_exp(ctx: Context) -> Outcome:
    g = ctx.algebra(ctx.args.file)
    ctx.mode = NUMERIC if ctx.args.numeric else EXACT
    m = _exp_input(ctx, g, ctx.mode == EXACT)
    if ctx.mode == EXACT:
        e = exp_triangular(m, EXACT)
        res = {"exp": e.to_json(), "float": e.to_float().tolist(),
               "in_positive_triangular_group": e.in_positive_triangular_group()}
        lines = ["Exp(M) entries as (coefficient, exponent) pairs:"]
        lines += ["  " + json.dumps(row) for row in e.to_json()]
        return Outcome(0, res, lines)
    a = exp_triangular(m, NUMERIC)
    return Outcome(0, {"exp": a.tolist()}, ["Exp(M) ~"] + _float_rows(a))


def cmd_log(ctx: Context) -> Outcome:
    ctx.algebra(ctx.args.file)
    ctx.mode = NUMERIC
    ctx.tol = ctx.args.tol if ctx.args.tol is not None else DEFAULT_LOG_TOL
    t = _matrix_arg(ctx.args.matrix, exact=False)
    x = log_triangular_positive(t, ctx.tol)
    resid = float(np.linalg.norm(expm(x) - t, np.inf))
    return Outcome(0, {"log": x.tolist(), "residual": resid},
                   ["Log(T) ~"] + _float_rows(x) + [f"|Exp(X) - T|_inf = {resid:.2e}"])


def cmd_group_classify(ctx: Context) -> Outcome:
    data = ctx.read(ctx.args.file)
    if isinstance(data, dict) and "f" in data:
        p = presentation_from_json(data)
    else:
        p = GroupPresentation(algebra_from_json(data), 0, ())
    v = classify_group(p)
    code = {DEFINABLE: 0, INVALID_PRESENTATION: 2}.get(v.kind, 1)
    lines = [f"group (dim f = {p.f.dim}, torus rank {p.torus_rank}): {_verdict_word(v.kind)}"]
    if v.kind == INVALID_PRESENTATION:
        lines.append(f"failed rule: {v.failed_rule.rule} ({v.failed_rule})")
    return Outcome(code, v.to_json(), lines)


def cmd_catalog(ctx: Context) -> Outcome:
    if ctx.args.name is None:
        entries = catalog()
        res = {"entries": [{"name": e.name, "kind": e.kind, "description": e.description,
                            "expected": e.expected} for e in entries]}
        lines = [f"{e.name:15s} {e.kind:12s} {e.description}" for e in entries]
        return Outcome(0, res, lines)
    e = catalog_entry(ctx.args.name)
    lines = [f"{e.name}: {e.description}", f"expected: {json.dumps(e.expected)}",
             f"provenance: {e.provenance}", json.dumps(e.payload_json(), indent=2)]
    return Outcome(0, e.to_json(), lines)


def cmd_selftest(ctx: Context) -> Outcome:
    checks = run_selftest(ctx.args.seed)
    failed = [c for c in checks if not c[1]]
    res = {"passed": len(checks) - len(failed), "failed": len(failed),
           "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in checks]}
    lines = [f"{'PASS' if ok else 'FAIL'} {n} {d}".rstrip() for n, ok, d in checks]
    lines.append(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return Outcome(1 if failed else 0, res, lines)


COMMANDS = {
    "validate": cmd_validate, "classify": cmd_classify, "flag": cmd_flag, "embed": cmd_embed,
    "exp": cmd_exp, "log": cmd_log, "group-classify": cmd_group_classify,
    "catalog": cmd_catalog, "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=int, help="seed for randomized checks (default 0)")
    common.add_argument("--tol", type=float,
                        help="tolerance (default 1e-9 for log, 1e-8 for numeric flags)")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")

    parser = argparse.ArgumentParser(prog="liedef", parents=[common],
                                     description="Complete solvability, triangular models and "
                                                 "definability of solvable Lie groups.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text, description=help_text)

    add("validate", "check an algebra or presentation file").add_argument("file")
    p = add("classify", "solvability and complete solvability with witness")
    p.add_argument("file")
    p.add_argument("--samples", type=int, default=200, help="random elements to test")
    p = add("flag", "complete flag of ideals")
    p.add_argument("file")
    p.add_argument("--numeric", action="store_true", help="floating point flag with residuals")
    add("embed", "faithful upper triangular representation").add_argument("file")
    p = add("exp", "exponential of an upper triangular matrix")
    p.add_argument("file")
    p.add_argument("--matrix", help="JSON rows, rational strings for exact mode")
    p.add_argument("--element", help="algebra element (coordinates or {name: value}); "
                                     "uses its image under the triangular model")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact ExpNumber entries (default)")
    mode.add_argument("--numeric", action="store_true", help="double precision")
    p = add("log", "logarithm of an upper triangular matrix with positive diagonal")
    p.add_argument("file")
    p.add_argument("--matrix", required=True, help="JSON rows")
    add("group-classify", "definability verdict for a group presentation").add_argument("file")
    add("catalog", "list builtin examples or show one").add_argument("name", nargs="?")
    add("selftest", "run the invariant suites")
    return parser


def _report(ctx: Context, command: str, started: float, code: int, payload_key: str, payload):
    return {
        "command": command,
        "tool": "liedef",
        "version": __version__,
        "input": ctx.input,
        "mode": ctx.mode,
        "tol": ctx.tol,
        "seed": ctx.args.seed,
        "elapsed_seconds": round(time.perf_counter() - started, 6),
        "exit_code": code,
        "status": STATUS[code],
        payload_key: payload,
    }


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    for name, default in (("json", False), ("seed", 0), ("tol", None), ("verbose", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=stderr,
                        format="liedef: %(levelname)s: %(message)s")
    ctx = Context(args)
    started = time.perf_counter()
    try:
        out = COMMANDS[args.command](ctx)
    except LieDefError as exc:
        code = exc.exit_code
        print(f"liedef {args.command}: {type(exc).__name__}: {exc}", file=stderr)
        if args.json:
            report = _report(ctx, args.command, started, code, "error", exc.to_json())
            print(json.dumps(report, indent=2), file=stdout)
        return code
    if args.json:
        report = _report(ctx, args.command, started, out.code, "result", out.result)
        print(json.dumps(report, indent=2), file=stdout)
    else:
        for line in out.lines:
            print(line, file=stdout)
    return out.code


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
