"""Randomized differential testing: words, automata, and equivalence fuzzing.

Words are generated from a seeded PRNG, so every report is reproducible from
its seed and parameters.  Timestamp denominators default to {1, 2, 3, 4}:
integer and half-integer points sit exactly on the guard boundaries (the
x = 1 versus x > 1 distinction) where disagreements are most likely.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import AlphabetMismatchError
from .io_format import format_timed_word
from .model import Automaton, Edge, Guard, TimedWord
from .semantics import member
from .validate import is_irta

DEFAULT_DENOMINATORS = (1, 2, 3, 4)


def random_word(
    rng: random.Random,
    alphabet: tuple,
    max_len: int,
    max_time: int,
    denominators: tuple = DEFAULT_DENOMINATORS,
    strict: bool = False,
) -> TimedWord:
    """One random timed word: uniform length, letters, sorted rational times.

    Each timestamp is q/den with den drawn from `denominators` and the value
    bounded by max_time.  Sorting makes the sequence weakly monotone; with
    strict on, later events sharing a timestamp are dropped.
    """
    length = rng.randint(0, max_len)
    times = []
    for _ in range(length):
        den = rng.choice(denominators)
        times.append(Fraction(rng.randint(0, max_time * den), den))
    times.sort()
    events = []
    previous = None
    for t in times:
        if strict and t == previous:
            continue
        events.append((rng.choice(alphabet), t))
        previous = t
    return TimedWord(tuple(events))


def _random_guard(rng: random.Random, k: int) -> Guard:
    lower = rng.randint(0, k)
    lower_closed = rng.random() < 0.5
    if rng.random() < 0.4:
        return Guard(lower, lower_closed, None, False)
    return Guard(lower, lower_closed, rng.randint(lower, k), rng.random() < 0.5)


def random_irta(
    rng: random.Random,
    name: str = "rand",
    max_locations: int = 4,
    max_const: int = 2,
) -> Automaton:
    """A random (generally nondeterministic) IRTA.

    Resetting edges always get a point guard, so the integer-reset property
    holds by construction.
    """
    count = rng.randint(1, max_locations)
    locations = tuple(f"q{i}" for i in range(count))
    alphabet = tuple("abc"[: rng.randint(1, 3)])
    k = rng.randint(0, max_const)
    edges = []
    for src in locations:
        for letter in alphabet:
            for _ in range(rng.randint(0, 2)):
                dst = locations[rng.randrange(count)]
                if rng.random() < 0.35:
                    guard = Guard.point(rng.randint(0, k))
                    edges.append(Edge(src, dst, letter, guard, True))
                else:
                    edges.append(Edge(src, dst, letter, _random_guard(rng, k), False))
    accepting = frozenset(loc for loc in locations if rng.random() < 0.5)
    return Automaton(
        name=name,
        alphabet=alphabet,
        clock="x",
        locations=locations,
        initial=locations[0],
        accepting=accepting,
        edges=tuple(edges),
    )


@dataclass(frozen=True)
class FuzzReport:
    """Outcome of one differential fuzz run, reproducible from seed + params."""

    seed: int
    tried: int
    max_len: int
    max_time: int
    denominators: tuple
    mismatches: tuple

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_text(self) -> str:
        lines = [
            f"seed {self.seed}",
            f"tried {self.tried}",
            f"max_len {self.max_len}",
            f"max_time {self.max_time}",
            "denominators " + ",".join(str(d) for d in self.denominators),
            f"mismatches {len(self.mismatches)}",
        ]
        for w, va, vb in self.mismatches:
            lines.append(f"a={va} b={vb} word {format_timed_word(w)}".rstrip())
        return "\n".join(lines) + "\n"


def fuzz_equivalence(
    a: Automaton,
    b: Automaton,
    seed: int = 0,
    count: int = 1000,
    max_len: int = 8,
    max_time: int = None,
    denominators: tuple = DEFAULT_DENOMINATORS,
    strict: bool = False,
) -> FuzzReport:
    """Compare memberships of a and b on `count` random words.

    max_time defaults to max(K_a, K_b) + 4, enough to push clocks through
    the saturated region.  While an input is an IRTA, every simulation step
    also asserts the shared-fractional-part invariant.
    """
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(
            f"alphabets differ: {a.alphabet} vs {b.alphabet}"
        )
    if max_time is None:
        max_time = max(a.max_const, b.max_const) + 4
    check_a = is_irta(a)
    check_b = is_irta(b)
    rng = random.Random(seed)
    mismatches = []
    for _ in range(count):
        w = random_word(rng, a.alphabet, max_len, max_time, denominators, strict)
        va = member(a, w, check_shared_fraction=check_a)
        vb = member(b, w, check_shared_fraction=check_b)
        if va != vb:
            mismatches.append((w, va, vb))
    mismatches.sort(key=lambda row: (len(row[0].events), row[0].events))
    return FuzzReport(
        seed=seed,
        tried=count,
        max_len=max_len,
        max_time=max_time,
        denominators=tuple(denominators),
        mismatches=tuple(mismatches),
    )
