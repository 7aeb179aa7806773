"""Language analysis: completion, complement, product, emptiness, inclusion.

Emptiness explores a finite region graph instead of concrete configurations.
Because both inputs obey the integer-reset discipline, all clocks share the
fractional part of absolute time, so a joint region collapses to one integer
class per clock plus a single shared zero/positive fractional flag; the full
fractional-order construction for arbitrary timed automata is never needed
here, and the module refuses inputs that are not IRTA.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Union

from .errors import (
    AlphabetMismatchError,
    InvariantViolationError,
    NotDeterministicError,
    NotIrtaError,
)
from .guards import OffsetClass, atomic_regions, merge_adjacent, region_satisfies
from .model import Automaton, Edge, Guard, TimedWord
from .determinize import determinize
from .semantics import member
from .validate import check_deterministic, check_integer_reset


class ProductRegion(NamedTuple):
    """Joint clock region: one integer class per clock, shared fractional flag."""

    int_left: OffsetClass
    int_right: OffsetClass
    positive_frac: bool


class RegionNode(NamedTuple):
    loc_left: str
    loc_right: str
    region: ProductRegion


@dataclass(frozen=True)
class Product:
    """Synchronized product: both components fire on the same letter and instant."""

    left: Automaton
    right: Automaton

    def __post_init__(self):
        if self.left.alphabet != self.right.alphabet:
            raise AlphabetMismatchError(
                f"alphabets differ: {self.left.alphabet} vs {self.right.alphabet}"
            )

    def member(self, w: TimedWord) -> bool:
        """Acceptance of the product: both components accept.

        Component runs are independent once the letter and instant are
        fixed, so the reachable joint configurations are exactly the pairs
        of component configurations.
        """
        return member(self.left, w) and member(self.right, w)


def product(a: Automaton, b: Automaton) -> Product:
    return Product(a, b)


def _fresh_sink_name(a: Automaton) -> str:
    name = "sink"
    taken = set(a.locations)
    while name in taken:
        name += "_"
    return name


def complete(d: Automaton) -> Automaton:
    """Add a non-accepting sink so every (location, letter, value) has an edge."""
    report = check_deterministic(d)
    if not report.ok:
        raise NotDeterministicError(f"{len(report.conflicts)} guard overlap(s)")
    k = d.max_const
    regions = atomic_regions(k)
    identity = OffsetClass.exact(0)
    sink = _fresh_sink_name(d)
    new_edges = list(d.edges)
    for loc in d.locations:
        for letter in d.alphabet:
            guards = [e.guard for e in d.edges_from(loc, letter)]
            holes = [
                (r, sink)
                for r in regions
                if not any(region_satisfies(g, r, identity) for g in guards)
            ]
            for guard, _ in merge_adjacent(holes):
                new_edges.append(Edge(loc, sink, letter, guard, False))
    for letter in d.alphabet:
        new_edges.append(Edge(sink, sink, letter, Guard.true(), False))
    return Automaton(
        name=d.name,
        alphabet=d.alphabet,
        clock=d.clock,
        locations=d.locations + (sink,),
        initial=d.initial,
        accepting=d.accepting,
        edges=tuple(new_edges),
    )


def complement(d: Automaton) -> Automaton:
    """Completion with the accepting set inverted."""
    total = complete(d)
    return Automaton(
        name=f"{d.name}_comp",
        alphabet=total.alphabet,
        clock=total.clock,
        locations=total.locations,
        initial=total.initial,
        accepting=frozenset(total.locations) - total.accepting,
        edges=total.edges,
    )


def _universal(alphabet: tuple) -> Automaton:
    """Single-state automaton accepting every timed word over the alphabet."""
    edges = tuple(Edge("U", "U", letter, Guard.true(), False) for letter in alphabet)
    return Automaton(
        name="universal",
        alphabet=alphabet,
        clock="u",
        locations=("U",),
        initial="U",
        accepting=frozenset({"U"}),
        edges=edges,
    )


def _require_irta(a: Automaton) -> None:
    if not check_integer_reset(a).ok:
        raise NotIrtaError(f"automaton {a.name!r} is not an IRTA")


def _guard_holds(g: Guard, cls: OffsetClass, positive_frac: bool) -> bool:
    """Constant truth value of a guard on one cell of the collapsed region."""
    if cls.saturated:
        return not g.is_empty and g.upper is None
    if positive_frac:
        return g.covers_open_unit(cls.value)
    return g.contains(Fraction(cls.value))


def is_empty(p: Union[Product, Automaton]) -> tuple:
    """Region-graph emptiness with witness extraction.

    Returns (True, None) when no accepted word exists, otherwise (False, w)
    for a concrete witness w reconstructed from the region path: integer
    timestamps while the fractional part is zero, +1/2 inside positive
    segments.  The witness is re-verified by exact simulation before being
    returned; a verification failure would be a bug, not an input problem.
    """
    if isinstance(p, Automaton):
        _require_irta(p)
        p = Product(p, _universal(p.alphabet))
    _require_irta(p.left)
    _require_irta(p.right)
    a, b = p.left, p.right
    ka, kb = a.max_const, b.max_const

    def accepting(node: RegionNode) -> bool:
        return node.loc_left in a.accepting and node.loc_right in b.accepting

    zero = OffsetClass.exact(0)
    start = RegionNode(a.initial, b.initial, ProductRegion(zero, zero, False))
    parents: dict = {start: None}
    queue = deque([start])
    goal: Optional[RegionNode] = None
    if accepting(start):
        goal = start
    while queue and goal is None:
        node = queue.popleft()
        succs = []
        ia, ib, frac = node.region
        if frac:
            bumped = ProductRegion(ia.plus(1, ka), ib.plus(1, kb), False)
            succs.append((RegionNode(node.loc_left, node.loc_right, bumped), None))
        else:
            waited = ProductRegion(ia, ib, True)
            succs.append((RegionNode(node.loc_left, node.loc_right, waited), None))
        for letter in a.alphabet:
            for ea in a.edges_from(node.loc_left, letter):
                if not _guard_holds(ea.guard, ia, frac):
                    continue
                na = zero if ea.reset else ia
                for eb in b.edges_from(node.loc_right, letter):
                    if not _guard_holds(eb.guard, ib, frac):
                        continue
                    nb = zero if eb.reset else ib
                    succ = RegionNode(ea.dst, eb.dst, ProductRegion(na, nb, frac))
                    succs.append((succ, letter))
        for succ, action in succs:
            if succ in parents:
                continue
            parents[succ] = (node, action)
            if accepting(succ):
                goal = succ
                queue.clear()
                break
            queue.append(succ)
    if goal is None:
        return True, None

    steps = []
    node = goal
    while parents[node] is not None:
        node, action = parents[node]
        steps.append((node, action))
    steps.reverse()
    time = Fraction(0)
    events = []
    for node, action in steps:
        if action is None:
            # Each delay crosses half a unit: Zero -> Positive lands at the
            # canonical representative T + 1/2, Positive -> Zero at T + 1.
            time += Fraction(1, 2)
        else:
            events.append((action, time))
    witness = TimedWord(tuple(events))
    if not p.member(witness):
        raise InvariantViolationError(
            f"extracted witness {witness} rejected by simulation"
        )
    return False, witness


def includes(a: Automaton, b: Automaton) -> tuple:
    """Language inclusion of a in b, with a verified counterexample if it fails."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(
            f"alphabets differ: {a.alphabet} vs {b.alphabet}"
        )
    _require_irta(a)
    det_b, _ = determinize(b)
    empty, witness = is_empty(product(a, complement(det_b)))
    if empty:
        return True, None
    if not member(a, witness) or member(b, witness):
        raise InvariantViolationError(
            f"counterexample {witness} fails re-verification"
        )
    return False, witness


def equivalent(a: Automaton, b: Automaton) -> bool:
    """Mutual language inclusion."""
    return includes(a, b)[0] and includes(b, a)[0]
