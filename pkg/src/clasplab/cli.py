"""Command-line interface.

Every subcommand reads a diagram from a file, stdin, or a named generator,
and writes JSON by default (text mode is a human courtesy).  Identical
invocations with identical seeds produce byte-identical output.  Exit
codes: 0 success, 1 domain error (structured JSON on stderr), 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import diagram as diagram_mod
from .clasps import clasp_report
from .errors import ClaspLabError
from .fillability import (cobordism_parity_check, obstruction_verdict,
                          run_script, search_filling)
from .moves import parse_script
from .render import ascii_render, svg_render
from .rulings import enumerate_rulings

_GENERATORS = ("unknot", "trefoil", "torus4", "braid")


class _UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _generated(args) -> diagram_mod.FrontDiagram:
    name = args.generate
    if name == "unknot":
        return diagram_mod.generate_unknot()
    if name == "trefoil":
        return diagram_mod.generate_trefoil()
    if name == "torus4":
        if args.n is None:
            raise _UsageError("--generate torus4 needs --n")
        return diagram_mod.generate_torus4(args.n)
    if name == "braid":
        if args.strands is None or args.word is None:
            raise _UsageError("--generate braid needs --strands and --word")
        word = [int(t) for t in args.word.split(",") if t.strip()]
        return diagram_mod.generate_negative_braid_closure(args.strands, word)
    raise _UsageError(f"unknown generator {name!r}")


def _load_diagram(args, strict: bool = True):
    """Diagram plus per-event source lines (None for generated input)."""
    if args.generate is not None and args.input is not None:
        raise _UsageError("--input and --generate are mutually exclusive")
    if args.generate is not None:
        return _generated(args), None
    if args.input is None:
        raise _UsageError("need --input PATH|- or --generate NAME")
    text = _read_source(args.input)
    diagram, lines = diagram_mod.parse_with_lines(text)
    if strict:
        diagram_mod.require_valid(diagram)
    return diagram, lines


def _parse_ruling(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"--ruling must be a JSON array: {exc}") from exc
    if not isinstance(data, list) or not all(isinstance(v, int) for v in data):
        raise _UsageError("--ruling must be a JSON array of integers")
    return frozenset(data)


def _emit(args, payload: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _budget(args):
    if args.budget is not None:
        return args.budget
    env = os.environ.get("CLASPLAB_BUDGET")
    return int(env) if env else None


# ---------------------------------------------------------------------------
# subcommands

def _cmd_validate(args) -> int:
    diagram, lines = _load_diagram(args, strict=False)
    report = diagram_mod.validate(diagram)
    violations = []
    for v in report.violations:
        line = None
        if lines and 1 <= v.event_index <= len(lines):
            line = lines[v.event_index - 1]
        violations.append({"event": v.event_index, "line": line,
                           "rule": v.rule})
    if args.format == "text":
        body = "ok\n" if report.ok else "".join(
            f"violation at event {v['event']}"
            + (f" (line {v['line']})" if v["line"] else "")
            + f": {v['rule']}\n" for v in violations)
    else:
        body = _dumps({"ok": report.ok, "violations": violations})
    _emit(args, body)
    return 0 if report.ok else 1


def _cmd_rulings(args) -> int:
    diagram, _ = _load_diagram(args)
    rulings = enumerate_rulings(diagram, budget=_budget(args))
    listed = [sorted(r) for r in rulings]
    if args.format == "text":
        body = "".join("{" + ",".join(map(str, r)) + "}\n" for r in listed)
        body = body or "(no normal rulings)\n"
    else:
        body = _dumps(listed)
    _emit(args, body)
    return 0


def _reports(args, diagram):
    if args.ruling is not None:
        rulings = [_parse_ruling(args.ruling)]
    else:
        rulings = enumerate_rulings(diagram, budget=_budget(args))
    return [(sorted(r), clasp_report(diagram, r)) for r in rulings]


def _cmd_clasps(args) -> int:
    diagram, _ = _load_diagram(args)
    rows = [{"switches": sw, **report.to_json()}
            for sw, report in _reports(args, diagram)]
    if args.format == "text":
        body = "".join(
            f"switches {{{','.join(map(str, r['switches']))}}}: "
            f"{r['total']} clasps, {r['parity']}\n" for r in rows)
    else:
        body = _dumps(rows if args.ruling is None else rows[0])
    _emit(args, body)
    return 0


def _cmd_parity(args) -> int:
    diagram, _ = _load_diagram(args)
    rows = [{"switches": sw, "clasps": report.total, "parity": report.parity}
            for sw, report in _reports(args, diagram)]
    if args.format == "text":
        body = "".join(
            f"{{{','.join(map(str, r['switches']))}}}: {r['parity']}\n"
            for r in rows)
    else:
        body = _dumps(rows if args.ruling is None else rows[0])
    _emit(args, body)
    return 0


def _cmd_obstruct(args) -> int:
    diagram, _ = _load_diagram(args)
    verdict = obstruction_verdict(diagram, budget=_budget(args))
    if args.format == "text":
        lines = [f"verdict: {verdict.verdict}\n"]
        for e in verdict.evidence:
            lines.append(f"  ruling {{{','.join(map(str, e.switches))}}}: "
                         f"{e.clasps} clasps, {e.parity}\n")
        if verdict.note:
            lines.append(f"note: {verdict.note}\n")
        body = "".join(lines)
    else:
        body = _dumps(verdict.to_json())
    _emit(args, body)
    return 0


def _cmd_cobordism(args) -> int:
    lower, _ = _load_diagram(args)
    if args.upper is not None:
        upper = diagram_mod.parse(_read_source(args.upper), strict=True)
    elif args.generate_upper is not None:
        ns = argparse.Namespace(generate=args.generate_upper,
                                n=args.upper_n, strands=None, word=None)
        upper = _generated(ns)
    else:
        raise _UsageError("need --upper PATH or --generate-upper NAME")
    result = cobordism_parity_check(lower, upper, budget=_budget(args))
    if args.format == "text":
        body = f"{result.status}\n"
        if result.reason:
            body += f"reason: {result.reason}\n"
    else:
        body = _dumps(result.to_json())
    _emit(args, body)
    return 0


def _cmd_apply_script(args) -> int:
    text = _read_source(args.script)
    certificate = run_script(parse_script(text))
    if args.format == "text":
        body = (f"final diagram: {certificate.diagram}\n"
                f"ruling: {{{','.join(map(str, sorted(certificate.ruling)))}}}\n"
                f"clasps: {certificate.report.total} "
                f"({certificate.report.parity})\n")
    else:
        body = _dumps(certificate.to_json())
    _emit(args, body)
    return 0


def _cmd_search(args) -> int:
    diagram, _ = _load_diagram(args)
    budget = _budget(args)
    result = search_filling(diagram, depth_bound=args.depth,
                            node_budget=budget if budget else 20000)
    if args.format == "text":
        body = f"{result.status}\n"
        if result.script is not None:
            body += "".join(str(m) + "\n" for m in result.script)
    else:
        body = _dumps(result.to_json())
    _emit(args, body)
    return 0


def _cmd_generate(args) -> int:
    diagram = _generated(args)
    _emit(args, diagram_mod.serialize(diagram))
    return 0


def _cmd_render(args) -> int:
    diagram, _ = _load_diagram(args)
    ruling = _parse_ruling(args.ruling) if args.ruling is not None else None
    if args.style == "ascii":
        if ruling is not None:
            raise _UsageError("ascii rendering does not take --ruling")
        body = ascii_render(diagram)
    else:
        body = svg_render(diagram, ruling)
    _emit(args, body)
    return 0


# ---------------------------------------------------------------------------

def _add_io_flags(p, needs_diagram=True):
    if needs_diagram:
        p.add_argument("--input", "-i", metavar="PATH",
                       help="diagram file, or - for stdin")
        p.add_argument("--generate", choices=_GENERATORS,
                       help="synthesize the input instead of reading it")
        p.add_argument("--n", type=int, help="parameter for torus4")
        p.add_argument("--strands", type=int, help="strand count for braid")
        p.add_argument("--word", help="comma-separated braid letters")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", metavar="PATH", help="write output to a file")
    p.add_argument("--budget", type=int,
                   help="node budget for enumeration/search "
                        "(default: $CLASPLAB_BUDGET)")
    p.add_argument("--seed", type=int, default=0, help="RNG seed")
    p.add_argument("--depth", type=int, default=8, help="search depth bound")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clasplab",
        description="Front diagrams, normal rulings, clasp parity, and "
                    "the decomposable-filling obstruction.")
    sub = parser.add_subparsers(dest="command", required=True)

    handlers = {}

    def register(name, fn, needs_diagram=True):
        p = sub.add_parser(name)
        _add_io_flags(p, needs_diagram)
        handlers[name] = fn
        return p

    register("validate", _cmd_validate)
    register("rulings", _cmd_rulings)
    p = register("clasps", _cmd_clasps)
    p.add_argument("--ruling", help="JSON array of switch ordinals")
    p = register("parity", _cmd_parity)
    p.add_argument("--ruling", help="JSON array of switch ordinals")
    register("obstruct", _cmd_obstruct)
    p = register("cobordism", _cmd_cobordism)
    p.add_argument("--upper", metavar="PATH",
                   help="upper diagram file for the parity test")
    p.add_argument("--generate-upper", choices=_GENERATORS,
                   help="synthesize the upper diagram")
    p.add_argument("--upper-n", type=int, help="torus4 parameter for --generate-upper")
    p = register("apply-script", _cmd_apply_script, needs_diagram=False)
    p.add_argument("--script", required=True, metavar="PATH",
                   help="move script file, or - for stdin")
    register("search", _cmd_search)
    register("generate", _cmd_generate)
    p = register("render", _cmd_render)
    p.add_argument("--ruling", help="JSON array of switch ordinals")
    p.add_argument("--style", choices=("svg", "ascii"), default="svg")

    parser.set_defaults(handlers=handlers)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = args.handlers[args.command]
    try:
        return handler(args)
    except _UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except ClaspLabError as exc:
        sys.stderr.write(_dumps({"error": type(exc).__name__,
                                 "message": str(exc)}))
        return 1


if __name__ == "__main__":
    sys.exit(main())
