"""Exact operational semantics for timed words.

This is the ground-truth membership oracle: it simulates all nondeterministic
branches of an automaton on a timed word using exact rational arithmetic.
Configurations that cannot fire any edge are dropped; acceptance asks whether
some surviving configuration sits in an accepting location after the last
event.
"""

from fractions import Fraction
from typing import NamedTuple

from .errors import (
    InvariantViolationError,
    TimeRegressionError,
    UnknownLetterError,
)
from .model import Automaton, TimedWord
from .rational import fractional_part


class Config(NamedTuple):
    loc: str
    clock: Fraction
    last_reset: Fraction


class ConfigSet(NamedTuple):
    configs: frozenset
    time: Fraction


def initial_configs(a: Automaton) -> ConfigSet:
    zero = Fraction(0)
    return ConfigSet(frozenset({Config(a.initial, zero, zero)}), zero)


def step_configs(
    a: Automaton,
    cs: ConfigSet,
    letter: str,
    t: Fraction,
    check_shared_fraction: bool = False,
) -> ConfigSet:
    """Advance every configuration to time t and take all enabled edges.

    Raises TimeRegressionError when t precedes the set's current time and
    UnknownLetterError for letters outside the alphabet.  With
    check_shared_fraction on, asserts the integer-reset invariant that every
    clock shares the fractional part of absolute time (only meaningful when
    the automaton is an IRTA).
    """
    t = Fraction(t)
    if t < cs.time:
        raise TimeRegressionError(f"time {t} precedes current time {cs.time}")
    if letter not in a.alphabet:
        raise UnknownLetterError(f"letter {letter!r} not in alphabet")
    delta = t - cs.time
    successors = set()
    for config in cs.configs:
        clock = config.clock + delta
        for edge in a.edges_from(config.loc, letter):
            if edge.guard.contains(clock):
                if edge.reset:
                    successors.add(Config(edge.dst, Fraction(0), t))
                else:
                    successors.add(Config(edge.dst, clock, config.last_reset))
    result = ConfigSet(frozenset(successors), t)
    if check_shared_fraction:
        assert_shared_fraction(result)
    return result


def assert_shared_fraction(cs: ConfigSet) -> None:
    """All clocks must share the fractional part of absolute time."""
    expected = fractional_part(cs.time)
    for config in cs.configs:
        if fractional_part(config.clock) != expected:
            raise InvariantViolationError(
                f"clock {config.clock} at {config.loc} breaks the shared "
                f"fractional part {expected} at time {cs.time}"
            )


def member(
    a: Automaton, w: TimedWord, check_shared_fraction: bool = False
) -> bool:
    """Does the automaton accept the timed word?"""
    cs = initial_configs(a)
    for letter, t in w:
        cs = step_configs(a, cs, letter, t, check_shared_fraction)
        if not cs.configs:
            return False
    return any(config.loc in a.accepting for config in cs.configs)
