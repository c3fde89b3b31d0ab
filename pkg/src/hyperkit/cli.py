"""Command line entry point: ``hyperkit <command> ...``.

Exit codes: 0 when every checked law holds, 1 when some law fails, 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from importlib import resources
from typing import List, Optional, Sequence

from .axioms import PROFILES, LawReport, Sampler, run_suite
from .builtins import BUILTINS, get_builtin
from .core import HyperkitError
from .dsl import ParseError, check_identity, parse_identity, parse_structure
from .morphisms import tropical_supertropical_iso
from .power import NonAssociativeFold, invertible_subsets, tilde_closure

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def report_schema() -> dict:
    """JSON Schema for the documents written with ``--json``."""
    text = resources.files("hyperkit").joinpath("report.schema.json").read_text("utf-8")
    return json.loads(text)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _default_seed() -> int:
    raw = os.environ.get("HYPERKIT_SEED")
    if raw is None or raw == "":
        return 0
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"HYPERKIT_SEED must be an integer, got {raw!r}") from None


def _add_structure(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", choices=sorted(BUILTINS), metavar="NAME",
                     help="builtin structure: " + ", ".join(BUILTINS))
    src.add_argument("--file", metavar="PATH", help="structure definition file")


def _add_sampling(p: argparse.ArgumentParser) -> None:
    p.add_argument("--samples", type=int, default=1000, help="samples per law (default 1000)")
    p.add_argument("--seed", type=int, default=None,
                   help="sampling seed (default: $HYPERKIT_SEED, else 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperkit", description="Check hyperstructure axioms exactly.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="run an axiom suite")
    _add_structure(p)
    p.add_argument("--suite", choices=list(PROFILES), default="hyperfield")
    _add_sampling(p)
    p.add_argument("--json", action="store_true", help="print a JSON report")

    p = sub.add_parser("closure", help="print the tilde closure")
    _add_structure(p)
    p.add_argument("--max-iterations", type=int, default=16)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("identity", help="check a term identity")
    _add_structure(p)
    p.add_argument("--expr", required=True, help='e.g. "(x1+x2)+x3 = x1+(x2+x3)"')
    _add_sampling(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("iso", help="check the tropical/supertropical isomorphism")
    _add_sampling(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("invertibles", help="list invertible subsets")
    _add_structure(p)
    p.add_argument("--size-cap", type=int, default=8)
    p.add_argument("--json", action="store_true")

    sub.add_parser("list", help="list builtin structures")
    return parser


def _structure(args):
    if args.builtin:
        return get_builtin(args.builtin)
    try:
        with open(args.file, encoding="utf-8") as fh:
            return parse_structure(fh.read())
    except OSError as exc:
        raise _UsageError(f"cannot read {args.file}: {exc.strerror}") from None


def _sampler(args) -> Sampler:
    seed = args.seed if args.seed is not None else _default_seed()
    return Sampler(seed=seed, samples=args.samples)


def _emit(doc: dict, as_json: bool, lines: List[str], out) -> None:
    if as_json:
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def _law_doc(command: str, reports: Sequence[LawReport], **extra) -> dict:
    ok = all(r.ok for r in reports)
    return {"schema": SCHEMA_VERSION, "command": command, "ok": ok,
            "reports": [r.to_dict() for r in reports], **extra}


def _cmd_check(args, out) -> int:
    A, sampler = _structure(args), _sampler(args)
    reports = run_suite(A, args.suite, sampler)
    doc = _law_doc("check", reports, structure=A.name, suite=args.suite,
                   seed=sampler.seed, samples=sampler.samples)
    lines = [f"# {A.name} suite={args.suite} seed={sampler.seed} samples={sampler.samples}"]
    lines += [r.line() for r in reports]
    lines.append("verdict: " + ("PASS" if doc["ok"] else "FAIL"))
    _emit(doc, args.json, lines, out)
    return EXIT_OK if doc["ok"] else EXIT_FAIL


def _cmd_closure(args, out) -> int:
    A = _structure(args)
    closure = tilde_closure(A, max_iterations=args.max_iterations)
    sets = [str(s) for s in closure]
    doc = {"schema": SCHEMA_VERSION, "command": "closure", "ok": True, "structure": A.name,
           "saturated": closure.saturated, "iterations": closure.iterations, "sets": sets}
    status = "saturated" if closure.saturated else "not saturated"
    lines = [f"# {A.name}: {len(sets)} sets, {status} after {closure.iterations} iterations"]
    _emit(doc, args.json, lines + sets, out)
    return EXIT_OK


def _cmd_identity(args, out) -> int:
    A, sampler = _structure(args), _sampler(args)
    spec = parse_identity(args.expr)
    rep = check_identity(A, spec, sampler)
    doc = _law_doc("identity", [rep], structure=A.name, expr=str(spec),
                   multilinear=spec.multilinear, seed=sampler.seed, samples=sampler.samples)
    lines = [f"# {A.name}: {spec} multilinear={str(spec.multilinear).lower()}", rep.line(),
             "verdict: " + ("PASS" if doc["ok"] else "FAIL")]
    _emit(doc, args.json, lines, out)
    return EXIT_OK if doc["ok"] else EXIT_FAIL


def _cmd_iso(args, out) -> int:
    sampler = _sampler(args)
    rep = tropical_supertropical_iso(sampler)
    doc = _law_doc("iso", [rep], structure="tropical", seed=sampler.seed, samples=sampler.samples)
    lines = [rep.line(), "verdict: " + ("PASS" if doc["ok"] else "FAIL")]
    _emit(doc, args.json, lines, out)
    return EXIT_OK if doc["ok"] else EXIT_FAIL


def _cmd_invertibles(args, out) -> int:
    A = _structure(args)
    found = [str(s) for s in invertible_subsets(A, size_cap=args.size_cap)]
    doc = {"schema": SCHEMA_VERSION, "command": "invertibles", "ok": True,
           "structure": A.name, "sets": found}
    _emit(doc, args.json, [f"# {A.name}: {len(found)} invertible subsets"] + found, out)
    return EXIT_OK


def _cmd_list(args, out) -> int:
    for name in BUILTINS:
        A = get_builtin(name)
        out.write(f"{name}\t{A.carrier.kind}\n")
    return EXIT_OK


_COMMANDS = {
    "check": _cmd_check, "closure": _cmd_closure, "identity": _cmd_identity,
    "iso": _cmd_iso, "invertibles": _cmd_invertibles, "list": _cmd_list,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "samples", 1) < 1:
            raise _UsageError("--samples must be positive")
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NonAssociativeFold)
            return _COMMANDS[args.command](args, out)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"hyperkit: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HyperkitError as exc:
        print(f"hyperkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:   # --help
        return int(exc.code or 0)


def entry() -> None:
    sys.exit(main())
