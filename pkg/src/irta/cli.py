"""Command-line front end.

Exit codes follow one convention across subcommands: 0 means the affirmative
verdict (valid, accepted, empty, included, equivalent, zero mismatches, or a
successful transformation), 1 means the negative verdict with a report or
counterexample on standard output, and 2 means a usage or input error with a
message on standard error.  Counterexample words print in the timed-word
grammar (LETTER@TIME ...).
"""

import argparse
import sys

from .analysis import includes, is_empty
from .determinize import determinize
from .errors import IrtaError
from .fuzz import fuzz_equivalence
from .io_format import (
    format_edge,
    format_timed_word,
    parse_automaton,
    parse_timed_word,
    print_automaton,
    to_dot,
)
from .model import Automaton, validate_wellformed
from .report import write_report
from .semantics import member
from .validate import check_integer_reset


def _load(path: str) -> Automaton:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise IrtaError(str(exc)) from None
    try:
        return parse_automaton(text)
    except IrtaError as exc:
        raise IrtaError(f"{path}: {exc}") from None


def _cmd_check(args) -> int:
    a = _load(args.file)
    problems = list(validate_wellformed(a).problems)
    for edge in check_integer_reset(a).offenders:
        problems.append(
            "reset outside an integer point: " + format_edge(edge, a.clock)
        )
    if problems:
        for problem in problems:
            print(problem)
        return 1
    print("ok")
    return 0


def _cmd_det(args) -> int:
    a = _load(args.file)
    det, state_map = determinize(a)
    lines = [f"# {name} = {state_map[name].display(a.max_const)}" for name in det.locations]
    text = "\n".join(lines) + "\n" + print_automaton(det)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_member(args) -> int:
    a = _load(args.file)
    w = parse_timed_word(" ".join(args.word), strict=args.strict_mono)
    if member(a, w):
        print("accepted")
        return 0
    print("rejected")
    return 1


def _cmd_empty(args) -> int:
    a = _load(args.file)
    empty, witness = is_empty(a)
    if empty:
        print("empty")
        return 0
    print(format_timed_word(witness))
    return 1


def _cmd_include(args) -> int:
    a = _load(args.a)
    b = _load(args.b)
    ok, counterexample = includes(a, b)
    if ok:
        print("included")
        return 0
    print(format_timed_word(counterexample))
    return 1


def _cmd_equiv(args) -> int:
    a = _load(args.a)
    b = _load(args.b)
    for first, second in ((a, b), (b, a)):
        ok, counterexample = includes(first, second)
        if not ok:
            print(format_timed_word(counterexample))
            return 1
    print("equivalent")
    return 0


def _cmd_fuzz(args) -> int:
    a = _load(args.a)
    b = _load(args.b)
    try:
        denominators = tuple(int(part) for part in args.denoms.split(","))
    except ValueError:
        raise IrtaError(f"bad denominator list {args.denoms!r}") from None
    if not denominators or any(d < 1 for d in denominators):
        raise IrtaError(f"denominators must be positive: {args.denoms!r}")
    report = fuzz_equivalence(
        a,
        b,
        seed=args.seed,
        count=args.count,
        max_len=args.max_len,
        max_time=args.max_time,
        denominators=denominators,
        strict=args.strict_mono,
    )
    sys.stdout.write(report.to_text())
    if args.report_dir:
        write_report(report, a.alphabet, args.report_dir, strict=args.strict_mono)
    return 0 if report.ok else 1


def _cmd_dot(args) -> int:
    a = _load(args.file)
    sys.stdout.write(to_dot(a))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="irta",
        description="Single-clock integer-reset timed automata toolkit.",
    )
    parser.add_argument(
        "--strict-mono",
        action="store_true",
        help="reject equal adjacent timestamps in timed words",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate well-formedness and integer resets")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("det", help="determinize an IRTA")
    p.add_argument("file")
    p.add_argument("-o", "--output", help="write the result here instead of stdout")
    p.set_defaults(handler=_cmd_det)

    p = sub.add_parser("member", help="test membership of a timed word")
    p.add_argument("file")
    p.add_argument("word", nargs="*", help="events as LETTER@TIME")
    p.set_defaults(handler=_cmd_member)

    p = sub.add_parser("empty", help="emptiness check with witness")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_empty)

    p = sub.add_parser("include", help="language inclusion of A in B")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(handler=_cmd_include)

    p = sub.add_parser("equiv", help="language equivalence of A and B")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(handler=_cmd_equiv)

    p = sub.add_parser("fuzz", help="differential membership fuzzing of A vs B")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--max-time", type=int, default=None,
                   help="default: max guard constant + 4")
    p.add_argument("--denoms", default="1,2,3,4",
                   help="comma-separated timestamp denominators")
    p.add_argument("--report-dir",
                   help="write summary.csv, mismatches.csv, and figures here")
    p.set_defaults(handler=_cmd_fuzz)

    p = sub.add_parser("dot", help="export to Graphviz DOT")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_dot)

    return parser


def run_cli(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except IrtaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
