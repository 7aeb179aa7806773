"""Integer-reset and determinism checks.

Both checks return reports rather than raising: callers that need a hard
failure wrap them (see determinize and the analysis operations).
"""

from dataclasses import dataclass

from .model import Automaton


@dataclass(frozen=True)
class IntegerResetReport:
    """Edges whose reset is not forced to happen at an integer clock value."""

    offenders: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.offenders


@dataclass(frozen=True)
class DeterminismReport:
    """Pairs of same-source, same-letter edges with overlapping guards."""

    conflicts: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.conflicts


def check_integer_reset(a: Automaton) -> IntegerResetReport:
    """Every resetting edge must carry a point guard (or an empty one).

    Guards are normalized intervals, so the syntactic point test is also
    semantically complete: a conjunction like x >= 1 and x <= 1 has already
    collapsed to the point [1, 1].  Empty-guarded edges can never fire and
    are vacuously fine.
    """
    offenders = tuple(
        e for e in a.edges if e.reset and not (e.guard.is_point or e.guard.is_empty)
    )
    return IntegerResetReport(offenders)


def check_deterministic(a: Automaton) -> DeterminismReport:
    """Guards of same-source, same-letter edges must be pairwise disjoint."""
    conflicts = []
    groups: dict = {}
    for edge in a.edges:
        groups.setdefault((edge.src, edge.letter), []).append(edge)
    for key in sorted(groups):
        edges = groups[key]
        for i in range(len(edges)):
            for j in range(i + 1, len(edges)):
                if not edges[i].guard.intersect(edges[j].guard).is_empty:
                    conflicts.append((edges[i], edges[j]))
    return DeterminismReport(tuple(conflicts))


def is_irta(a: Automaton) -> bool:
    return check_integer_reset(a).ok
