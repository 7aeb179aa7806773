import random

from irta import (
    Automaton,
    Edge,
    Guard,
    check_deterministic,
    check_integer_reset,
    is_irta,
    normalize_guard,
)


def single(edges, alphabet=("a",)):
    return Automaton(
        name="t",
        alphabet=alphabet,
        clock="x",
        locations=("q",),
        initial="q",
        accepting=frozenset({"q"}),
        edges=tuple(edges),
    )


class TestIntegerReset:
    def test_loop_automaton_ok(self, loop_a):
        assert check_integer_reset(loop_a).ok
        assert is_irta(loop_a)

    def test_reset_on_ray_reported(self, loop_a):
        # turn the b, x >= 1 edge into a resetting one
        edges = tuple(
            Edge(e.src, e.dst, e.letter, e.guard, True)
            if e.letter == "b" and not e.guard.is_point
            else e
            for e in loop_a.edges
        )
        bad = Automaton(
            name=loop_a.name,
            alphabet=loop_a.alphabet,
            clock=loop_a.clock,
            locations=loop_a.locations,
            initial=loop_a.initial,
            accepting=loop_a.accepting,
            edges=edges,
        )
        report = check_integer_reset(bad)
        assert not report.ok
        assert len(report.offenders) == 1
        offender = report.offenders[0]
        assert offender.letter == "b"
        assert offender.guard == Guard.at_least(1)
        assert offender.reset

    def test_normalized_conjunction_point_ok(self):
        g = normalize_guard([(">=", 1), ("<=", 1)])
        a = single([Edge("q", "q", "a", g, True)])
        assert check_integer_reset(a).ok

    def test_empty_guard_reset_vacuously_ok(self):
        a = single([Edge("q", "q", "a", Guard.empty(), True)])
        assert check_integer_reset(a).ok

    def test_open_interval_reset_reported(self):
        a = single([Edge("q", "q", "a", Guard(0, False, 1, False), True)])
        assert not check_integer_reset(a).ok


class TestDeterminism:
    def test_disjoint_rays_ok(self):
        a = single(
            [
                Edge("q", "q", "a", Guard.less_than(1), False),
                Edge("q", "q", "a", Guard.greater_than(1), False),
            ]
        )
        assert check_deterministic(a).ok

    def test_loop_automaton_is_nondeterministic(self, loop_a):
        # the point-1 reset edge and the ray x >= 1 overlap at x = 1
        report = check_deterministic(loop_a)
        assert not report.ok
        assert any(
            {e1.letter, e2.letter} == {"b"} for e1, e2 in report.conflicts
        )

    def test_determinized_output_ok(self, loop_det):
        det, _ = loop_det
        assert check_deterministic(det).ok

    def test_verdict_ignores_edge_order(self, loop_a):
        rng = random.Random(3)
        edges = list(loop_a.edges)
        for _ in range(5):
            rng.shuffle(edges)
            shuffled = Automaton(
                name=loop_a.name,
                alphabet=loop_a.alphabet,
                clock=loop_a.clock,
                locations=loop_a.locations,
                initial=loop_a.initial,
                accepting=loop_a.accepting,
                edges=tuple(edges),
            )
            assert check_deterministic(shuffled).ok == check_deterministic(loop_a).ok

    def test_different_letters_never_conflict(self):
        a = single(
            [
                Edge("q", "q", "a", Guard.true(), False),
                Edge("q", "q", "b", Guard.true(), False),
            ],
            alphabet=("a", "b"),
        )
        assert check_deterministic(a).ok

    def test_empty_guard_overlaps_nothing(self):
        a = single(
            [
                Edge("q", "q", "a", Guard.true(), False),
                Edge("q", "q", "a", Guard.empty(), False),
            ]
        )
        assert check_deterministic(a).ok
