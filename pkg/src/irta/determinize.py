"""Offset-class subset construction for single-clock integer-reset automata.

The deterministic automaton runs one fresh clock n.  Because resets only
happen at integer clock values, every component clock of the input stays an
integer offset ahead of n, and offsets above the guard constant K are
indistinguishable.  A state of the output is therefore a finite set of
(location, offset class) pairs, and one subset step per (letter, atomic
region of n) keeps the construction deterministic.
"""

from collections import deque
from dataclasses import dataclass

from .errors import NotIrtaError
from .guards import OffsetClass, Region, atomic_regions, merge_adjacent, region_satisfies
from .model import Automaton, Edge
from .validate import check_integer_reset


@dataclass(frozen=True)
class SubsetState:
    """Canonically ordered set of (location, OffsetClass) pairs."""

    pairs: tuple

    @classmethod
    def of(cls, pairs) -> "SubsetState":
        return cls(tuple(sorted(set(pairs))))

    def __bool__(self) -> bool:
        return bool(self.pairs)

    def display(self, k: int) -> str:
        inner = ",".join(f"({loc},{d.display(k)})" for loc, d in self.pairs)
        return "{" + inner + "}"


def successor_subset(
    q: SubsetState, letter: str, r: Region, a: Automaton
) -> tuple:
    """One joint step of all constituents on `letter` inside region r of n.

    Returns (successor subset, reset flag).  The flag is true iff some
    enabled constituent edge resets its clock; the integer-reset property
    forces that to happen only when r is an integer point c, in which case n
    restarts from c and the offsets of non-resetting survivors grow by c
    (saturating above K).
    """
    report = check_integer_reset(a)
    if not report.ok:
        raise NotIrtaError(
            f"{len(report.offenders)} edge(s) reset outside an integer point"
        )
    k = a.max_const
    enabled = []
    any_reset = False
    for loc, d in q.pairs:
        for edge in a.edges_from(loc, letter):
            if region_satisfies(edge.guard, r, d):
                enabled.append((edge, d))
                any_reset = any_reset or edge.reset
    successors = set()
    for edge, d in enabled:
        if edge.reset:
            successors.add((edge.dst, OffsetClass.exact(0)))
        elif any_reset:
            successors.add((edge.dst, d.plus(r.c, k)))
        else:
            successors.add((edge.dst, d))
    return SubsetState.of(successors), any_reset


def determinize(a: Automaton, merge_guards: bool = True) -> tuple:
    """Build the deterministic automaton over the fresh clock n.

    Returns (automaton, state map), where the state map sends each fresh
    location id to the SubsetState it stands for.  Location ids are S1, S2,
    ... in breadth-first discovery order (letters in alphabet order, regions
    left to right).  Raises NotIrtaError when the input is not an IRTA.

    With merge_guards (the default) adjacent regions with the same target
    and reset flag are merged into single interval guards; otherwise every
    edge carries one atomic region.  Both forms accept the same words.
    """
    report = check_integer_reset(a)
    if not report.ok:
        raise NotIrtaError(
            f"{len(report.offenders)} edge(s) reset outside an integer point"
        )
    k = a.max_const
    regions = atomic_regions(k)
    initial = SubsetState.of([(a.initial, OffsetClass.exact(0))])
    names: dict = {initial: "S1"}
    order = [initial]
    queue = deque([initial])
    transitions = []
    while queue:
        state = queue.popleft()
        for letter in a.alphabet:
            rows = []
            for region in regions:
                successor, any_reset = successor_subset(state, letter, region, a)
                if not successor:
                    continue
                if successor not in names:
                    names[successor] = f"S{len(names) + 1}"
                    order.append(successor)
                    queue.append(successor)
                # Resetting n at the point n = 0 is the identity, so the
                # emitted edge only marks resets at positive points.
                emitted_reset = any_reset and region.c > 0 and region.is_point
                rows.append((region, (names[successor], emitted_reset)))
            if merge_guards:
                merged = merge_adjacent(rows)
            else:
                merged = [(region.to_guard(), payload) for region, payload in rows]
            for guard, (target, reset) in merged:
                transitions.append((names[state], target, letter, guard, reset))
    edges = tuple(
        Edge(src, dst, letter, guard, reset)
        for src, dst, letter, guard, reset in transitions
    )
    locations = tuple(names[state] for state in order)
    accepting = frozenset(
        names[state]
        for state in order
        if any(loc in a.accepting for loc, _ in state.pairs)
    )
    det = Automaton(
        name=f"{a.name}_det",
        alphabet=a.alphabet,
        clock="n",
        locations=locations,
        initial="S1",
        accepting=accepting,
        edges=edges,
    )
    state_map = {names[state]: state for state in order}
    return det, state_map
