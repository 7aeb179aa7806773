"""Line-oriented text format for automata, timed-word parsing, DOT export.

The wire format is one declaration per line, '#' starts a comment, blank
lines are ignored:

    automaton NAME
    alphabet SYM+
    clock NAME
    locations ID+
    init ID
    accepting ID*
    edge SRC -> DST : LETTER [GUARD] (reset CLOCK)?

GUARD is `true` or ATOM (& ATOM)* with ATOM := CLOCK OP INT and OP one of
==, <, <=, >, >=.  Operators are ASCII only; rationals in timed words are
written p/q, never decimals.  Printing is canonical, so parse(print(a))
reproduces a structurally.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import IrtaError, NonMonotoneTimeError
from .guards import normalize_guard
from .model import Automaton, Edge, Guard, TimedWord


@dataclass(frozen=True)
class SourceSpan:
    """1-based line and column of a token, for error reporting."""

    line: int
    column: int

    def __post_init__(self):
        if self.line < 1 or self.column < 1:
            raise ValueError(f"spans are 1-based: {self}")

    def __str__(self) -> str:
        return f"line {self.line}, column {self.column}"


class ParseError(IrtaError):
    """Syntax error in the automaton or timed-word grammar."""

    def __init__(self, message: str, span: SourceSpan):
        super().__init__(f"{span}: {message}")
        self.span = span


_TOKEN_RE = re.compile(r"->|==|<=|>=|[<>:\[\]&]|\d+|[A-Za-z_][A-Za-z0-9_]*")
_OPS = ("==", "<", "<=", ">", ">=")
_KEYWORDS = ("automaton", "alphabet", "clock", "locations", "init", "accepting")


def _tokenize(body: str, line: int) -> list:
    """Split one line into (text, SourceSpan) pairs; reject stray characters."""
    tokens = []
    pos = 0
    while pos < len(body):
        if body[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(body, pos)
        if match is None:
            raise ParseError(
                f"unexpected character {body[pos]!r}", SourceSpan(line, pos + 1)
            )
        tokens.append((match.group(), SourceSpan(line, pos + 1)))
        pos = match.end()
    return tokens


def _is_id(text: str) -> bool:
    return bool(re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", text))


class _Cursor:
    """Forward-only view over one line's tokens with located errors."""

    def __init__(self, tokens: list, line: int, end_column: int):
        self.tokens = tokens
        self.pos = 0
        self.end_span = SourceSpan(line, end_column)

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][0]
        return None

    def take(self, what: str) -> tuple:
        if self.pos >= len(self.tokens):
            raise ParseError(f"expected {what}", self.end_span)
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, literal: str) -> tuple:
        text, span = self.take(f"{literal!r}")
        if text != literal:
            raise ParseError(f"expected {literal!r}, found {text!r}", span)
        return text, span

    def take_id(self, what: str) -> tuple:
        text, span = self.take(what)
        if not _is_id(text):
            raise ParseError(f"expected {what}, found {text!r}", span)
        return text, span

    def take_int(self, what: str) -> tuple:
        text, span = self.take(what)
        if not text.isdigit():
            raise ParseError(f"expected {what}, found {text!r}", span)
        return int(text), span

    def finish(self):
        if self.pos < len(self.tokens):
            text, span = self.tokens[self.pos]
            raise ParseError(f"unexpected trailing token {text!r}", span)


def _parse_guard(cursor: _Cursor) -> tuple:
    """Parse `[GUARD]`, returning (Guard, list of (clock name, span))."""
    cursor.expect("[")
    clock_refs = []
    if cursor.peek() == "true":
        cursor.take("guard")
        cursor.expect("]")
        return Guard.true(), clock_refs
    atoms = []
    while True:
        name, span = cursor.take_id("clock name")
        clock_refs.append((name, span))
        op, op_span = cursor.take("comparison operator")
        if op not in _OPS:
            raise ParseError(
                f"expected comparison operator, found {op!r}", op_span
            )
        value, _ = cursor.take_int("integer")
        atoms.append((op, value))
        if cursor.peek() == "&":
            cursor.take("'&'")
            continue
        break
    cursor.expect("]")
    return normalize_guard(atoms), clock_refs


def parse_automaton(text: str) -> Automaton:
    """Parse the wire format into an Automaton.

    Only syntax is enforced here; semantic problems (unknown locations or
    letters, duplicates) are deferred to validate_wellformed so that a
    report can name them all at once.  The one exception is clock names
    inside guards and resets, which must match the declared clock because
    the model stores guards without clock names.
    """
    decls: dict = {}
    edge_rows = []
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        cut = raw.find("#")
        body = raw if cut < 0 else raw[:cut]
        if not body.strip():
            continue
        tokens = _tokenize(body, lineno)
        keyword, kw_span = tokens[0]
        cursor = _Cursor(tokens, lineno, len(body.rstrip()) + 1)
        cursor.take("declaration keyword")
        if keyword in _KEYWORDS:
            if keyword in decls:
                raise ParseError(f"duplicate {keyword!r} declaration", kw_span)
            if keyword in ("automaton", "clock", "init"):
                value, _ = cursor.take_id("an identifier")
                cursor.finish()
                decls[keyword] = value
            else:
                ids = []
                while cursor.peek() is not None:
                    text_, _ = cursor.take_id("an identifier")
                    ids.append(text_)
                if not ids and keyword != "accepting":
                    raise ParseError(
                        f"{keyword!r} needs at least one identifier",
                        cursor.end_span,
                    )
                decls[keyword] = tuple(ids)
        elif keyword == "edge":
            src, _ = cursor.take_id("source location")
            cursor.expect("->")
            dst, _ = cursor.take_id("target location")
            cursor.expect(":")
            letter, _ = cursor.take_id("letter")
            guard, clock_refs = _parse_guard(cursor)
            reset = False
            if cursor.peek() == "reset":
                cursor.take("'reset'")
                name, span = cursor.take_id("clock name")
                clock_refs.append((name, span))
                reset = True
            cursor.finish()
            edge_rows.append((src, dst, letter, guard, reset, clock_refs))
        else:
            raise ParseError(f"unknown declaration {keyword!r}", kw_span)
    eof = SourceSpan(len(lines) + 1, 1)
    for required in ("automaton", "alphabet", "clock", "locations", "init"):
        if required not in decls:
            raise ParseError(f"missing {required!r} declaration", eof)
    clock = decls["clock"]
    for _, _, _, _, _, clock_refs in edge_rows:
        for name, span in clock_refs:
            if name != clock:
                raise ParseError(
                    f"unknown clock {name!r} (declared clock is {clock!r})", span
                )
    edges = tuple(
        Edge(src, dst, letter, guard, reset)
        for src, dst, letter, guard, reset, _ in edge_rows
    )
    return Automaton(
        name=decls["automaton"],
        alphabet=decls["alphabet"],
        clock=clock,
        locations=decls["locations"],
        initial=decls["init"],
        accepting=frozenset(decls.get("accepting", ())),
        edges=edges,
    )


def _guard_text(g: Guard, clock: str) -> str:
    if g.is_empty:
        return f"{clock} < 0"
    if g.is_point:
        return f"{clock} == {g.lower}"
    parts = []
    if g.lower > 0 or not g.lower_closed:
        parts.append(f"{clock} {'>=' if g.lower_closed else '>'} {g.lower}")
    if g.upper is not None:
        parts.append(f"{clock} {'<=' if g.upper_closed else '<'} {g.upper}")
    return " & ".join(parts) if parts else "true"


def format_edge(e: Edge, clock: str) -> str:
    suffix = f" reset {clock}" if e.reset else ""
    return f"edge {e.src} -> {e.dst} : {e.letter} [{_guard_text(e.guard, clock)}]{suffix}"


def print_automaton(a: Automaton) -> str:
    """Canonical text: declarations in grammar order, edges pre-sorted."""
    accepting = [loc for loc in a.locations if loc in a.accepting]
    accepting += sorted(a.accepting - set(a.locations))
    lines = [
        f"automaton {a.name}",
        "alphabet " + " ".join(a.alphabet),
        f"clock {a.clock}",
        "locations " + " ".join(a.locations),
        f"init {a.initial}",
        ("accepting " + " ".join(accepting)).rstrip(),
    ]
    lines.extend(format_edge(e, a.clock) for e in a.edges)
    return "\n".join(lines) + "\n"


_EVENT_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)@(\d+)(?:/(\d+))?\Z")


def _line_col(text: str, offset: int) -> SourceSpan:
    line = text.count("\n", 0, offset) + 1
    last_break = text.rfind("\n", 0, offset)
    return SourceSpan(line, offset - last_break)


def parse_timed_word(text: str, strict: bool = False) -> TimedWord:
    """Parse whitespace-separated LETTER@TIME events.

    TIME is an integer or a rational p/q.  Decreasing timestamps raise
    NonMonotoneTimeError with the offending index; with strict on, equal
    adjacent timestamps are rejected the same way.
    """
    events = []
    for match in re.finditer(r"\S+", text):
        token = match.group()
        span = _line_col(text, match.start())
        event = _EVENT_RE.match(token)
        if event is None:
            raise ParseError(f"expected LETTER@TIME, found {token!r}", span)
        letter = event.group(1)
        num = int(event.group(2))
        den = event.group(3)
        if den is not None and int(den) == 0:
            raise ParseError(f"zero denominator in {token!r}", span)
        time = Fraction(num, int(den)) if den is not None else Fraction(num)
        events.append((letter, time))
    if strict:
        for i in range(1, len(events)):
            if events[i][1] <= events[i - 1][1]:
                raise NonMonotoneTimeError(
                    f"timestamp fails to increase at index {i} (strict mode)", i
                )
    return TimedWord(tuple(events))


def format_timed_word(w: TimedWord) -> str:
    return " ".join(f"{letter}@{time}" for letter, time in w)


def _dot_guard(g: Guard, clock: str) -> str:
    if g.is_empty:
        return "false"
    if g.is_point:
        return f"{clock}={g.lower}"
    low = "" if g.lower == 0 and g.lower_closed else (
        f"{g.lower}{'<=' if g.lower_closed else '<'}"
    )
    if g.upper is None:
        if not low:
            return "true"
        return f"{clock}{'>=' if g.lower_closed else '>'}{g.lower}"
    return f"{low}{clock}{'<=' if g.upper_closed else '<'}{g.upper}"


def to_dot(a: Automaton) -> str:
    """DOT digraph: accepting locations double-circled, entry arrow on init."""
    entry = "__init"
    while entry in a.locations:
        entry += "_"
    lines = [
        "digraph {",
        "  rankdir=LR;",
        f'  "{entry}" [shape=point, label=""];',
    ]
    for loc in a.locations:
        shape = "doublecircle" if loc in a.accepting else "circle"
        lines.append(f'  "{loc}" [shape={shape}];')
    lines.append(f'  "{entry}" -> "{a.initial}";')
    for e in a.edges:
        label = f"{e.letter}, {_dot_guard(e.guard, a.clock)}"
        if e.reset:
            label += ", reset"
        lines.append(f'  "{e.src}" -> "{e.dst}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
