"""Command-line interface.

Exit codes: 0 positive verdict (equal / contained / no refutation / valid /
halted / all checks pass), 1 negative verdict, 2 node budget exceeded,
3 parse or validation error, 4 theorem harness inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import equivalence, games, io, reduction, resolver, twocm, vass
from .corpus import machine_corpus
from .errors import Inconclusive, InvalidMachine, InvariantViolation, ParseError, ResourceBound, ValidationErrors
from .verdicts import (
    ContainedUpTo, Distinguished, EqualUpTo, NoRefutationUpTo, OkUpTo,
    SpoilerWins, Witness, format_word,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_BUDGET, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3, 4
DEFAULT_MAXLEN = 8
DEFAULT_DEPTH = 8
DEFAULT_FUEL = 10**5


class _Out:
    def __init__(self, args):
        self.machine = args.format == "machine-readable"
        self.budget = vass.Budget(args.budget)
        self.started = time.perf_counter()
        self.doc = {"command": args.command}
        self.lines = []

    def text(self, line: str = "") -> None:
        self.lines.append(line)

    def emit(self) -> None:
        if self.machine:
            self.doc["statistics"] = {
                "nodes_explored": self.budget.explored,
                "max_antichain": self.budget.max_antichain,
                "wall_time_s": round(time.perf_counter() - self.started, 6),
            }
            print(json.dumps(self.doc, indent=2, sort_keys=True))
        else:
            for line in self.lines:
                print(line)


def _verdict_doc(v) -> dict:
    doc = {"verdict": type(v).__name__}
    for name in ("bound", "depth"):
        if hasattr(v, name):
            doc[name] = getattr(v, name)
    for name in ("word", "witness"):
        if hasattr(v, name):
            doc["witness"] = list(getattr(v, name))
    if hasattr(v, "in_first"):
        doc["in_first"] = v.in_first
    return doc


def _read_cm(path: str) -> twocm.CounterMachine:
    return io.parse_cm(Path(path).read_text())


def _read_vass(path: str) -> vass.Vass:
    return io.parse_vass(Path(path).read_text())


# --- subcommands ------------------------------------------------------------


def cmd_validate(args, out: _Out) -> int:
    m = io.parse_cm(Path(args.machine).read_text(), check=False)
    violations = twocm.validate(m)
    out.doc["violations"] = [str(v) for v in violations]
    if violations:
        for v in violations:
            out.text(f"violation: {v}")
        return EXIT_INPUT
    out.text(f"valid: {len(m.states)} states, {len(m.transitions)} transitions")
    return EXIT_OK


def cmd_run(args, out: _Out) -> int:
    m = _read_cm(args.machine)
    result = twocm.run_bounded(m, args.fuel)
    if isinstance(result, twocm.Halted):
        ops = [op.value for op in result.ops]
        out.doc.update(outcome="Halted", steps=result.steps, ops=ops, halting_word=list(twocm.word_from_ops(ops)))
        out.text(f"Halted after {result.steps} steps: {' '.join(ops) or '(no steps)'}")
        out.text(f"halting word: {format_word(twocm.word_from_ops(ops))}")
        return EXIT_OK
    out.doc.update(outcome="Running", after=result.after)
    out.text(f"Running after {result.after} steps")
    return EXIT_NEGATIVE


def cmd_build(args, out: _Out) -> int:
    r = reduction.build_b(_read_cm(args.machine))
    v = {"n": r.n, "a": r.a, "b": r.b}[args.which]
    doc = io.print_vass(v)
    if args.out:
        Path(args.out).write_text(doc)
    elif not out.machine:
        out.text(doc.rstrip("\n"))
    if args.dot:
        Path(args.dot).write_text(io.export_dot(v, r.tags, name=args.which.upper()))
    out.doc.update(which=args.which, states=len(v.states), transitions=len(v.transitions))
    if out.machine and not args.out:
        out.doc["vass"] = json.loads(doc)
    return EXIT_OK


def cmd_lang(args, out: _Out) -> int:
    v = _read_vass(args.vass)
    fn = vass.bounded_trace_language if args.semantics == "trace" else vass.bounded_cover_language
    words = fn(v, args.maxlen, out.budget)
    out.doc.update(semantics=args.semantics, maxlen=args.maxlen, words=[list(w) for w in words])
    for w in words:
        out.text(format_word(w))
    out.text(f"{len(words)} words of length <= {args.maxlen}")
    return EXIT_OK


def _describe(verdict) -> str:
    if isinstance(verdict, EqualUpTo):
        return f"no difference up to length {verdict.bound}"
    if isinstance(verdict, Distinguished):
        side = "first" if verdict.in_first else "second"
        return f"distinguished by {format_word(verdict.word)} (only in the {side})"
    if isinstance(verdict, ContainedUpTo):
        return f"no counterexample to containment up to length {verdict.bound}"
    if isinstance(verdict, Witness):
        return f"not contained: {format_word(verdict.word)}"
    if isinstance(verdict, NoRefutationUpTo):
        return f"no Spoiler win within {verdict.depth} rounds"
    if isinstance(verdict, SpoilerWins):
        return f"Spoiler wins in {verdict.depth} rounds playing {format_word(verdict.witness)}"
    return str(verdict)


def cmd_eq(args, out: _Out) -> int:
    a, b = _read_vass(args.a), _read_vass(args.b)
    verdict = equivalence.equal_bounded(a, b, args.maxlen, args.semantics, out.budget)
    out.doc.update(_verdict_doc(verdict), semantics=args.semantics)
    out.text(_describe(verdict))
    return EXIT_OK if isinstance(verdict, EqualUpTo) else EXIT_NEGATIVE


def cmd_contain(args, out: _Out) -> int:
    a, b = _read_vass(args.a), _read_vass(args.b)
    verdict = equivalence.containment_bounded(a, b, args.maxlen, args.semantics, out.budget)
    out.doc.update(_verdict_doc(verdict), semantics=args.semantics)
    out.text(_describe(verdict))
    return EXIT_OK if isinstance(verdict, ContainedUpTo) else EXIT_NEGATIVE


def cmd_sim(args, out: _Out) -> int:
    v0, v1 = _read_vass(args.duplicator), _read_vass(args.spoiler)
    verdict = games.simulates_bounded(v0, v1, args.depth, out.budget)
    out.doc.update(_verdict_doc(verdict))
    out.text(_describe(verdict))
    return EXIT_OK if isinstance(verdict, NoRefutationUpTo) else EXIT_NEGATIVE


def cmd_twosim(args, out: _Out) -> int:
    a, b = _read_vass(args.a), _read_vass(args.b)
    fwd, bwd = games.two_sided_bounded(a, b, args.depth, out.budget)
    out.doc.update(a_simulates_b=_verdict_doc(fwd), b_simulates_a=_verdict_doc(bwd))
    out.text(f"a simulates b: {_describe(fwd)}")
    out.text(f"b simulates a: {_describe(bwd)}")
    both = isinstance(fwd, NoRefutationUpTo) and isinstance(bwd, NoRefutationUpTo)
    return EXIT_OK if both else EXIT_NEGATIVE


def cmd_resolver_check(args, out: _Out) -> int:
    r = reduction.build_b(_read_cm(args.machine))
    verdict = resolver.check_history_det_bounded(r.b, resolver.jancar_resolver(r), args.maxlen, out.budget)
    out.doc.update(_verdict_doc(verdict))
    if isinstance(verdict, OkUpTo):
        out.text(f"resolver follows every word of B up to length {verdict.bound}")
        return EXIT_OK
    out.text(f"resolver loses the word {format_word(verdict.word)}")
    return EXIT_NEGATIVE


def _report_doc(report) -> dict:
    return {
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks],
        "halting_word": list(report.halting_word) if report.halting_word else None,
        "language": _verdict_doc(report.verdict) if report.verdict is not None else None,
        "passed": report.passed,
    }


def cmd_theorem(args, out: _Out) -> int:
    m = _read_cm(args.machine)
    try:
        report = equivalence.theorem_harness(m, args.fuel, args.maxlen, out.budget)
    except Inconclusive as exc:
        out.doc.update(outcome="Inconclusive", reason=str(exc))
        if exc.report is not None:
            out.doc.update(_report_doc(exc.report))
            for c in exc.report.checks:
                out.text(str(c))
        out.text(f"inconclusive: {exc}")
        return EXIT_INCONCLUSIVE
    out.doc.update(_report_doc(report))
    for c in report.checks:
        out.text(str(c))
    out.text(f"languages: {_describe(report.verdict)}")
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def cmd_fuzz(args, out: _Out) -> int:
    machines = machine_corpus(args.seed, args.count, args.states)
    results = []
    failed = 0
    for i, m in enumerate(machines):
        try:
            report = equivalence.theorem_harness(m, args.fuel, args.maxlen, out.budget)
            status = "pass" if report.passed else "FAIL"
            failed += not report.passed
        except Inconclusive:
            status = "inconclusive"
        results.append(status)
        out.text(f"machine {i}: {status}")
    out.doc.update(seed=args.seed, results=results, failed=failed)
    out.text(f"{failed} failures among {len(machines)} machines (seed {args.seed})")
    return EXIT_OK if failed == 0 else EXIT_NEGATIVE


# --- parser -----------------------------------------------------------------


def _global_flags(parser, suppress: bool) -> None:
    d = (lambda x: argparse.SUPPRESS) if suppress else (lambda x: x)
    parser.add_argument("--budget", type=int, default=d(vass.DEFAULT_BUDGET), help="node budget for bounded searches")
    parser.add_argument("--format", choices=("text", "machine-readable"), default=d("text"))
    parser.add_argument("--seed", type=int, default=d(0), help="seed for randomized commands")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vassred", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = add("validate", cmd_validate, "check a .2cm machine")
    p.add_argument("machine")
    p = add("run", cmd_run, "run a machine from q_i(0, 0)")
    p.add_argument("machine")
    p.add_argument("--fuel", type=int, default=DEFAULT_FUEL)
    p = add("build", cmd_build, "build N, A or B from a machine")
    p.add_argument("which", choices=("n", "a", "b"))
    p.add_argument("machine")
    p.add_argument("--out")
    p.add_argument("--dot")
    p = add("lang", cmd_lang, "list a bounded language")
    p.add_argument("vass")
    p.add_argument("--maxlen", type=int, default=DEFAULT_MAXLEN)
    p.add_argument("--semantics", choices=equivalence.SEMANTICS, default="trace")
    for name, func, help in (("eq", cmd_eq, "bounded language equality"), ("contain", cmd_contain, "bounded containment")):
        p = add(name, func, help)
        p.add_argument("a")
        p.add_argument("b")
        p.add_argument("--maxlen", type=int, default=DEFAULT_MAXLEN)
        p.add_argument("--semantics", choices=equivalence.SEMANTICS, default="trace")
    p = add("sim", cmd_sim, "bounded simulation game")
    p.add_argument("duplicator")
    p.add_argument("spoiler")
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    p = add("twosim", cmd_twosim, "bounded two-sided simulation")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    p = add("resolver-check", cmd_resolver_check, "validate the resolver of B")
    p.add_argument("machine")
    p.add_argument("--maxlen", type=int, default=DEFAULT_MAXLEN)
    p = add("theorem", cmd_theorem, "full reduction harness for one machine")
    p.add_argument("machine")
    p.add_argument("--fuel", type=int, default=DEFAULT_FUEL)
    p.add_argument("--maxlen", type=int, default=DEFAULT_MAXLEN)
    p = add("fuzz", cmd_fuzz, "theorem harness over seeded random machines")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--states", type=int, default=6)
    p.add_argument("--fuel", type=int, default=10**4)
    p.add_argument("--maxlen", type=int, default=DEFAULT_MAXLEN)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = _Out(args)
    try:
        code = args.func(args, out)
    except ResourceBound as exc:
        out.doc.update(error="ResourceBound", message=str(exc))
        out.text(f"resource bound: {exc}")
        code = EXIT_BUDGET
    except (ParseError, ValidationErrors, InvalidMachine, InvariantViolation) as exc:
        out.doc.update(error=type(exc).__name__, message=str(exc))
        if isinstance(exc, ValidationErrors):
            out.doc["diagnostics"] = [{"line": line, "violation": str(v)} for line, v in exc.diagnostics]
            for line, v in exc.diagnostics:
                print(f"line {line}: {v}", file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        code = EXIT_INPUT
    except OSError as exc:
        out.doc.update(error="OSError", message=str(exc))
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_INPUT
    out.doc["exit_code"] = code
    out.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
