"""Command-line front end.

Subcommands: ``eval`` (formula evaluation), ``lattice`` (subspace
operations), ``born`` (Born value of a projector in a state), ``ghz``
(the full demonstrator), ``verify-theorem`` (sampling verifier for the
four closure conditions).  Human-readable output by default, ``--json``
for machine output; results go to stdout (or ``--out``), diagnostics to
stderr.

Exit codes: 0 success, 1 validation/parse/usage error, 2 internal
numerical failure, 3 when ``verify-theorem`` finds a failing condition.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import formulas, ghz, hilbert, propfunctions
from .errors import InputError, NumericError, ValidationError

__all__ = ["build_parser", "run", "main"]


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parse_phase(text: str) -> int:
    if text in ("+1", "1"):
        return +1
    if text == "-1":
        return -1
    raise argparse.ArgumentTypeError(f"phase must be +1 or -1, got {text!r}")


def _add_common(parser):
    parser.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    parser.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    parser.add_argument(
        "--tol",
        type=float,
        metavar="X",
        help="override all tolerances for this invocation (default: 1e-9 "
        "construction/rank, 1e-12 identity checks)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="mvql",
        description="Many-valued truth degrees for quantum propositions.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p_eval = sub.add_parser("eval", help="evaluate a formula under an assignment")
    p_eval.add_argument("formula", nargs="?", help="formula text, e.g. 'p | ~p'")
    p_eval.add_argument("--formula-file", metavar="PATH", help="read the formula from a UTF-8 file")
    p_eval.add_argument("--assign", metavar="FILE", help="JSON assignment file binding the atoms")
    _add_common(p_eval)

    p_lattice = sub.add_parser("lattice", help="subspace lattice operations on projector files")
    p_lattice.add_argument("op", choices=("neg", "meet", "join", "leq", "exclusive"))
    p_lattice.add_argument("projectors", nargs="+", metavar="PROJ_FILE")
    _add_common(p_lattice)

    p_born = sub.add_parser("born", help="Born value of a projector in a state")
    p_born.add_argument("projector", metavar="PROJ_FILE")
    p_born.add_argument("state", metavar="STATE_FILE")
    _add_common(p_born)

    p_ghz = sub.add_parser("ghz", help="run the GHZ demonstrator")
    p_ghz.add_argument("--phase", type=_parse_phase, default=-1, help="state phase, +1 or -1 (default -1)")
    _add_common(p_ghz)

    p_verify = sub.add_parser("verify-theorem", help="sampling verifier for the closure conditions")
    p_verify.add_argument("--dim", type=int, required=True, help="Hilbert space dimension")
    p_verify.add_argument("--states", type=int, default=1000, help="number of state samples")
    p_verify.add_argument("--families", type=int, default=200, help="number of projector-family samples")
    p_verify.add_argument("--seed", type=int, default=0, help="RNG seed")
    _add_common(p_verify)

    return parser


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _emit_json(obj, out_path) -> None:
    _emit(json.dumps(obj, sort_keys=True), out_path)


def _cmd_eval(ns) -> int:
    if (ns.formula is None) == (ns.formula_file is None):
        raise _UsageError("provide a formula either as an argument or via --formula-file")
    if ns.formula_file is not None:
        try:
            with open(ns.formula_file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ValidationError(f"cannot read formula file {ns.formula_file!r}: {exc}") from exc
    else:
        text = ns.formula
    assignment = formulas.load_assignment(ns.assign) if ns.assign else {}
    value = formulas.evaluate(formulas.parse(text), assignment)
    if ns.json:
        _emit_json({"value": str(value), "decimal": float(value)}, ns.out)
    else:
        _emit(f"{value} = {float(value):g}", ns.out)
    return 0


def _cmd_lattice(ns) -> int:
    arity = 1 if ns.op == "neg" else 2
    if len(ns.projectors) != arity:
        raise _UsageError(f"lattice {ns.op} takes exactly {arity} projector file(s)")
    loaded = [hilbert.load_projector(path) for path in ns.projectors]
    if ns.op == "neg":
        result = hilbert.orthocomplement(loaded[0])
    elif ns.op == "meet":
        result = hilbert.meet(loaded[0], loaded[1])
    elif ns.op == "join":
        result = hilbert.join(loaded[0], loaded[1])
    elif ns.op == "leq":
        result = hilbert.leq(loaded[0], loaded[1])
    else:
        result = propfunctions.pf_exclusive(
            propfunctions.PropFunction(loaded[0]), propfunctions.PropFunction(loaded[1])
        )
    if isinstance(result, bool):
        if ns.json:
            _emit_json({"result": result}, ns.out)
        else:
            _emit("true" if result else "false", ns.out)
    else:
        _emit_json(result.to_json(), ns.out)
    return 0


def _cmd_born(ns) -> int:
    projector = hilbert.load_projector(ns.projector)
    state = hilbert.load_state(ns.state)
    value = hilbert.born_value(projector, state)
    if ns.json:
        _emit_json({"value": value}, ns.out)
    else:
        _emit(repr(value), ns.out)
    return 0


def _render_ghz(report: ghz.GhzReport) -> str:
    lines = ["GHZ demonstration"]
    lines.append("expectations: " + "  ".join(
        f"{pattern}={report.expectations[pattern]:+.9f}" for pattern in ghz.PATTERNS
    ))
    lines.append(
        f"classical preassignments satisfying all four equations: "
        f"{report.classical_solutions} of 64"
    )
    parity = report.parity
    lines.append(
        f"parity argument: product of LHS = {parity['lhs_product']:+d}, "
        f"product of RHS = {parity['rhs_product']:+d}"
    )
    xor = report.xor_system
    lines.append(
        f"XOR system: {xor.n_satisfying} of {xor.n_assignments} crisp assignments satisfy it; "
        f"LHS chain always 0: {'yes' if xor.lhs_chain_always_zero else 'no'}; "
        f"v(V ^ V ^ V ^ F) = {xor.vvvf_value}"
    )
    lines.append("many-valued degrees: " + "  ".join(
        f"{key}={ghz.format_degree(report.degrees[key])}" for key in ghz.DEGREE_KEYS
    ))
    lines.append(
        "conclusion: no 2-valued preassignment is consistent with the four "
        "expectations; the degree-1/2 description is"
    )
    return "\n".join(lines)


def _cmd_ghz(ns) -> int:
    report = ghz.ghz_report(ns.phase)
    if ns.json:
        _emit_json(report.to_json(), ns.out)
    else:
        _emit(_render_ghz(report), ns.out)
    return 0


def _render_verify(report: propfunctions.ConditionsReport) -> str:
    lines = [
        f"closure conditions at dim {report.dim} "
        f"(states={report.n_state_samples}, families={report.n_family_samples}, "
        f"seed={report.seed})"
    ]
    conditions = {
        "1 (contains F)": report.condition1,
        "2 (closed under negation)": report.condition2,
        "3 (closed under exclusive disjunction)": report.condition3,
        "4 (only F self-exclusive)": report.condition4,
    }
    for name, cond in conditions.items():
        status = "PASS" if cond.passed else "FAIL"
        lines.append(f"condition {name}: {status} (worst residual {cond.worst_residual:.3e})")
    return "\n".join(lines)


def _cmd_verify(ns) -> int:
    if ns.dim < 1:
        raise _UsageError("--dim must be >= 1")
    if ns.states < 1 or ns.families < 1:
        raise _UsageError("--states and --families must be >= 1")
    match_atol = ns.tol if ns.tol is not None else 1e-12
    report = propfunctions.verify_conditions(
        ns.dim, ns.states, ns.families, ns.seed, match_atol=match_atol
    )
    if ns.json:
        _emit_json(report.to_json(), ns.out)
    else:
        _emit(_render_verify(report), ns.out)
    return 0 if report.all_passed else 3


_HANDLERS = {
    "eval": _cmd_eval,
    "lattice": _cmd_lattice,
    "born": _cmd_born,
    "ghz": _cmd_ghz,
    "verify-theorem": _cmd_verify,
}


def run(argv=None) -> int:
    """Parse arguments, dispatch, and map errors to exit codes."""
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"mvql: error: {exc}", file=sys.stderr)
        return 1
    try:
        if ns.tol is not None:
            hilbert.set_atol(ns.tol)
        return _HANDLERS[ns.command](ns)
    except _UsageError as exc:
        print(f"mvql: error: {exc}", file=sys.stderr)
        return 1
    except InputError as exc:
        print(f"mvql: error: {exc}", file=sys.stderr)
        return 1
    except (NumericError, np.linalg.LinAlgError) as exc:
        print(f"mvql: numerical failure: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
