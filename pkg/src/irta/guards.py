"""Region-level reasoning for one-clock guards.

With K the largest guard constant, the nonnegative line splits into the
atomic regions {0}, (0,1), {1}, ..., {K}, (K, inf): inside each region every
guard with constants <= K is constantly true or constantly false.  Offset
classes track the integer difference between an original clock and the fresh
deterministic clock, saturated above K where guards can no longer tell
values apart.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .model import Guard

POINT = "point"
OPEN = "open"
ABOVE = "above"


@dataclass(frozen=True, order=True)
class Region:
    """One cell of the atomic partition for granularity K.

    kind POINT is {c}; kind OPEN is (c, c+1); kind ABOVE is (c, inf) with
    c = K.  `index` gives the position on the line, so sorting regions sorts
    them left to right.
    """

    index: int
    kind: str
    c: int

    @classmethod
    def point(cls, c: int) -> "Region":
        return cls(2 * c, POINT, c)

    @classmethod
    def open_unit(cls, c: int) -> "Region":
        return cls(2 * c + 1, OPEN, c)

    @classmethod
    def above(cls, k: int) -> "Region":
        return cls(2 * k + 1, ABOVE, k)

    @property
    def is_point(self) -> bool:
        return self.kind == POINT

    def to_guard(self) -> Guard:
        if self.kind == POINT:
            return Guard.point(self.c)
        if self.kind == OPEN:
            return Guard(self.c, False, self.c + 1, False)
        return Guard.greater_than(self.c)

    def __str__(self) -> str:
        if self.kind == POINT:
            return f"{{{self.c}}}"
        if self.kind == OPEN:
            return f"({self.c},{self.c + 1})"
        return f"({self.c},inf)"


@dataclass(frozen=True, order=True)
class OffsetClass:
    """Integer offset between a component clock and the deterministic clock.

    `value` is the exact offset when it is at most K; `saturated` marks the
    class of all offsets strictly above K, which guard satisfaction cannot
    distinguish.
    """

    saturated: bool
    value: int

    @classmethod
    def exact(cls, d: int) -> "OffsetClass":
        if d < 0:
            raise ValueError(f"offset must be nonnegative: {d}")
        return cls(False, d)

    @classmethod
    def above(cls) -> "OffsetClass":
        return cls(True, 0)

    def plus(self, c: int, k: int) -> "OffsetClass":
        """Offset growth when the deterministic clock restarts from value c."""
        if self.saturated or self.value + c > k:
            return OffsetClass.above()
        return OffsetClass.exact(self.value + c)

    def display(self, k: int) -> str:
        return f"{k}+" if self.saturated else str(self.value)


def normalize_guard(atoms: Iterable[tuple]) -> Guard:
    """Intersect atomic comparisons (op, constant) into one interval guard.

    op is one of '==', '=', '<', '<=', '>', '>='.  The result is the unique
    normalized interval equal to the conjunction; contradictions collapse to
    the canonical empty guard.
    """
    guard = Guard.true()
    for op, c in atoms:
        if c < 0:
            raise ValueError(f"guard constant must be nonnegative: {c}")
        if op in ("==", "="):
            atom = Guard.point(c)
        elif op == "<":
            atom = Guard.less_than(c)
        elif op == "<=":
            atom = Guard.at_most(c)
        elif op == ">":
            atom = Guard.greater_than(c)
        elif op == ">=":
            atom = Guard.at_least(c)
        else:
            raise ValueError(f"unknown comparison operator {op!r}")
        guard = guard.intersect(atom)
    return guard


def eval_guard(g: Guard, v: Fraction) -> bool:
    """True iff clock value v satisfies the guard."""
    return g.contains(v)


def atomic_regions(k: int) -> list:
    """The ordered partition [{0}, (0,1), {1}, ..., {K}, (K, inf)]."""
    if k < 0:
        raise ValueError(f"granularity constant must be nonnegative: {k}")
    regions = []
    for c in range(k):
        regions.append(Region.point(c))
        regions.append(Region.open_unit(c))
    regions.append(Region.point(k))
    regions.append(Region.above(k))
    return regions


def region_of(v: Fraction, k: int) -> Region:
    """The unique atomic region containing the nonnegative value v."""
    if v < 0:
        raise ValueError(f"clock values are nonnegative: {v}")
    v = Fraction(v)
    floor = v.numerator // v.denominator
    if v.denominator == 1 and floor <= k:
        return Region.point(floor)
    if floor >= k:
        return Region.above(k)
    return Region.open_unit(floor)


def region_satisfies(g: Guard, r: Region, d: OffsetClass) -> bool:
    """Does x = n + d satisfy g for every n in region r?

    For the saturated class, x exceeds every guard constant regardless of n
    (offsets above K give x > K while all finite endpoints of g are <= K),
    so only unbounded guards pass.
    """
    if d.saturated:
        return not g.is_empty and g.upper is None
    if r.kind == POINT:
        return g.contains(Fraction(r.c + d.value))
    if r.kind == OPEN:
        return g.covers_open_unit(r.c + d.value)
    return g.covers_tail(r.c + d.value)


def shift_guard_to_n(g: Guard, d: OffsetClass, k: int) -> set:
    """Rewrite a guard on the original clock x into regions of the fresh clock n.

    Returns exactly the atomic regions r such that x = n + d satisfies g for
    all n in r.  Guard endpoints must not exceed k, otherwise saturation
    would be unsound.
    """
    if g.max_finite_endpoint > k and not g.is_empty:
        raise ValueError(f"guard endpoint exceeds granularity constant {k}: {g}")
    return {r for r in atomic_regions(k) if region_satisfies(g, r, d)}


def merge_adjacent(rows: list) -> list:
    """Merge runs of adjacent equal-payload regions into single interval guards.

    `rows` is a list of (Region, payload) ordered by region position.  Runs
    must be contiguous on the line to merge: a hole between two regions keeps
    them apart even when the payloads match.  The output guards are pairwise
    disjoint and cover exactly the input regions.
    """
    merged = []
    run_start: Optional[Region] = None
    run_end: Optional[Region] = None
    run_payload = None

    def flush():
        if run_start is None:
            return
        upper_region = run_end
        if upper_region.kind == ABOVE:
            upper, upper_closed = None, False
        elif upper_region.kind == OPEN:
            upper, upper_closed = upper_region.c + 1, False
        else:
            upper, upper_closed = upper_region.c, True
        lower = run_start.c
        lower_closed = run_start.kind == POINT
        merged.append((Guard(lower, lower_closed, upper, upper_closed), run_payload))

    for region, payload in rows:
        if (
            run_end is not None
            and payload == run_payload
            and region.index == run_end.index + 1
        ):
            run_end = region
            continue
        flush()
        run_start = run_end = region
        run_payload = payload
    flush()
    return merged


def regions_covered(g: Guard, k: int) -> list:
    """Decompose a guard with endpoints <= k into the atomic regions it covers."""
    identity = OffsetClass.exact(0)
    return [r for r in atomic_regions(k) if region_satisfies(g, r, identity)]
