import random
from pathlib import Path

import pytest

from irta import (
    Automaton,
    OffsetClass,
    atomic_regions,
    determinize,
    parse_automaton,
    random_irta,
    region_satisfies,
)

DATA = Path(__file__).parent / "data"

CORPUS_SEED = 20240821
CORPUS_SIZE = 200


def load(name: str) -> Automaton:
    return parse_automaton((DATA / name).read_text(encoding="utf-8"))


def atomize(a: Automaton, k: int = None) -> dict:
    """Expand the edges into (src, letter, region index) -> (dst, reset).

    The map is the transition relation with guards decomposed into atomic
    regions, which makes two deterministic automata comparable regardless of
    how their guards happen to be grouped into edges.  Overlapping edges
    would be a determinism bug, so they fail loudly.
    """
    if k is None:
        k = a.max_const
    identity = OffsetClass.exact(0)
    table = {}
    for e in a.edges:
        for r in atomic_regions(k):
            if region_satisfies(e.guard, r, identity):
                key = (e.src, e.letter, r.index)
                assert key not in table, f"edges overlap at {key}"
                table[key] = (e.dst, e.reset)
    return table


@pytest.fixture(scope="session")
def loop_a() -> Automaton:
    return load("loop.irta")


@pytest.fixture(scope="session")
def loop_det_hand() -> Automaton:
    return load("loop_det.irta")


@pytest.fixture(scope="session")
def loop_det_alt() -> Automaton:
    return load("loop_det_alt.irta")


@pytest.fixture(scope="session")
def loop_det(loop_a):
    """(determinized loop automaton, state map)."""
    return determinize(loop_a)


@pytest.fixture(scope="session")
def corpus() -> list:
    rng = random.Random(CORPUS_SEED)
    return [random_irta(rng, name=f"rand{i}") for i in range(CORPUS_SIZE)]


@pytest.fixture(scope="session")
def corpus_dets(corpus) -> list:
    return [determinize(a) for a in corpus]
