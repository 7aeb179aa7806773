"""Core data model: guards, edges, automata, timed words.

Every value here is immutable after construction, so instances can be shared
freely (including across threads).  Structural validation that should produce
a report instead of an exception lives in :func:`validate_wellformed`.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional

from .errors import NegativeTimeError, NonMonotoneTimeError


@dataclass(frozen=True)
class Guard:
    """Interval constraint on the clock, with nonnegative integer endpoints.

    `upper is None` means the interval is unbounded above.  Construction
    normalizes: any unsatisfiable combination collapses to the canonical
    empty guard (0, 0) open on both sides, so structural equality coincides
    with semantic equality of intervals.
    """

    lower: int = 0
    lower_closed: bool = True
    upper: Optional[int] = None
    upper_closed: bool = False

    def __post_init__(self):
        if self.lower < 0 or (self.upper is not None and self.upper < 0):
            raise ValueError(f"guard endpoints must be nonnegative: {self}")
        if self.upper is None and self.upper_closed:
            object.__setattr__(self, "upper_closed", False)
        if self._describes_empty():
            # Canonical empty representative: the open interval (0, 0).
            object.__setattr__(self, "lower", 0)
            object.__setattr__(self, "lower_closed", False)
            object.__setattr__(self, "upper", 0)
            object.__setattr__(self, "upper_closed", False)

    def _describes_empty(self) -> bool:
        if self.upper is None:
            return False
        if self.lower > self.upper:
            return True
        return self.lower == self.upper and not (self.lower_closed and self.upper_closed)

    @classmethod
    def true(cls) -> "Guard":
        return cls(0, True, None, False)

    @classmethod
    def empty(cls) -> "Guard":
        return cls(0, False, 0, False)

    @classmethod
    def point(cls, c: int) -> "Guard":
        return cls(c, True, c, True)

    @classmethod
    def at_least(cls, c: int) -> "Guard":
        return cls(c, True, None, False)

    @classmethod
    def greater_than(cls, c: int) -> "Guard":
        return cls(c, False, None, False)

    @classmethod
    def at_most(cls, c: int) -> "Guard":
        return cls(0, True, c, True)

    @classmethod
    def less_than(cls, c: int) -> "Guard":
        return cls(0, True, c, False)

    @property
    def is_empty(self) -> bool:
        return self._describes_empty()

    @property
    def is_point(self) -> bool:
        """True iff the guard pins the clock to a single integer value."""
        return (
            self.upper is not None
            and self.lower == self.upper
            and self.lower_closed
            and self.upper_closed
        )

    @property
    def max_finite_endpoint(self) -> int:
        return self.lower if self.upper is None else max(self.lower, self.upper)

    def contains(self, value: Fraction) -> bool:
        if self.lower_closed:
            if value < self.lower:
                return False
        elif value <= self.lower:
            return False
        if self.upper is None:
            return True
        if self.upper_closed:
            return value <= self.upper
        return value < self.upper

    def covers_open_unit(self, c: int) -> bool:
        """True iff the whole open interval (c, c+1) satisfies the guard."""
        if self.is_empty or self.lower > c:
            return False
        return self.upper is None or self.upper >= c + 1

    def covers_tail(self, c: int) -> bool:
        """True iff the whole ray (c, infinity) satisfies the guard."""
        return not self.is_empty and self.upper is None and self.lower <= c

    def intersect(self, other: "Guard") -> "Guard":
        if self.lower > other.lower:
            lower, lower_closed = self.lower, self.lower_closed
        elif other.lower > self.lower:
            lower, lower_closed = other.lower, other.lower_closed
        else:
            lower, lower_closed = self.lower, self.lower_closed and other.lower_closed
        if self.upper is None:
            upper, upper_closed = other.upper, other.upper_closed
        elif other.upper is None:
            upper, upper_closed = self.upper, self.upper_closed
        elif self.upper < other.upper:
            upper, upper_closed = self.upper, self.upper_closed
        elif other.upper < self.upper:
            upper, upper_closed = other.upper, other.upper_closed
        else:
            upper, upper_closed = self.upper, self.upper_closed and other.upper_closed
        return Guard(lower, lower_closed, upper, upper_closed)

    def sort_key(self):
        return (
            self.lower,
            not self.lower_closed,
            self.upper is None,
            self.upper if self.upper is not None else 0,
            not self.upper_closed,
        )


@dataclass(frozen=True)
class Edge:
    src: str
    dst: str
    letter: str
    guard: Guard = field(default_factory=Guard.true)
    reset: bool = False


@dataclass(frozen=True)
class Automaton:
    """Single-clock automaton with guarded, optionally resetting edges.

    Acceptance is by final location after the last event of a finite word.
    Edges are stored in a canonical order (source, letter, guard), so two
    automata that differ only in edge listing order compare equal.
    """

    name: str
    alphabet: tuple
    clock: str
    locations: tuple
    initial: str
    accepting: frozenset
    edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "locations", tuple(self.locations))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        loc_rank = {loc: i for i, loc in enumerate(self.locations)}
        letter_rank = {sym: i for i, sym in enumerate(self.alphabet)}
        fallback = len(loc_rank) + len(letter_rank)

        def key(edge: Edge):
            return (
                loc_rank.get(edge.src, fallback),
                edge.src,
                letter_rank.get(edge.letter, fallback),
                edge.letter,
                edge.guard.sort_key(),
                loc_rank.get(edge.dst, fallback),
                edge.dst,
                edge.reset,
            )

        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=key)))

    @cached_property
    def max_const(self) -> int:
        """Largest finite guard endpoint (the region-granularity constant K)."""
        return max((e.guard.max_finite_endpoint for e in self.edges), default=0)

    @cached_property
    def _edges_by_src_letter(self) -> dict:
        index: dict = {}
        for edge in self.edges:
            index.setdefault((edge.src, edge.letter), []).append(edge)
        return index

    def edges_from(self, loc: str, letter: str) -> list:
        return self._edges_by_src_letter.get((loc, letter), [])


@dataclass(frozen=True)
class TimedWord:
    """Finite sequence of (letter, absolute timestamp) events.

    Timestamps are nonnegative rationals and must be non-decreasing; two
    events may share a timestamp (weak monotonicity).
    """

    events: tuple = ()

    def __post_init__(self):
        events = tuple((letter, Fraction(time)) for letter, time in self.events)
        object.__setattr__(self, "events", events)
        previous = Fraction(0)
        for index, (_, time) in enumerate(events):
            if time < 0:
                raise NegativeTimeError(f"negative timestamp at index {index}")
            if time < previous:
                raise NonMonotoneTimeError(
                    f"timestamp decreases at index {index}", index
                )
            previous = time

    def __iter__(self):
        return iter(self.events)

    def __len__(self) -> int:
        return len(self.events)


@dataclass(frozen=True)
class ValidationReport:
    problems: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.problems


def validate_wellformed(a: Automaton) -> ValidationReport:
    """Collect every structural invariant violation; empty report = well-formed."""
    problems = []
    seen = set()
    for loc in a.locations:
        if loc in seen:
            problems.append(f"duplicate location {loc!r}")
        seen.add(loc)
    seen = set()
    for sym in a.alphabet:
        if sym in seen:
            problems.append(f"duplicate alphabet symbol {sym!r}")
        seen.add(sym)
    loc_set = set(a.locations)
    if a.initial not in loc_set:
        problems.append(f"missing initial location {a.initial!r}")
    for loc in sorted(a.accepting - loc_set):
        problems.append(f"accepting location {loc!r} not declared")
    alphabet = set(a.alphabet)
    for i, edge in enumerate(a.edges):
        where = f"edge {i} ({edge.src} -> {edge.dst} on {edge.letter})"
        if edge.src not in loc_set:
            problems.append(f"{where}: unknown source location {edge.src!r}")
        if edge.dst not in loc_set:
            problems.append(f"{where}: unknown target location {edge.dst!r}")
        if edge.letter not in alphabet:
            problems.append(f"{where}: unknown letter {edge.letter!r}")
    return ValidationReport(tuple(problems))
