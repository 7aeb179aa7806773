"""Acceptance gate: one printed verdict line per criterion.

Each test prints exactly one line, `criterion N PASS <title> (details)` or
`criterion N FAIL <title>`, bypassing pytest capture so the verdicts appear
in every run.  Tolerances (state counts, runtimes, word counts) are pinned
in the asserts; a miss fails the test, never silently relaxes the bound.
"""

import random
from contextlib import contextmanager
from dataclasses import replace
from fractions import Fraction
from time import perf_counter

import pytest
from conftest import CORPUS_SIZE, DATA, atomize

from irta import (
    Edge,
    Guard,
    InvariantViolationError,
    TimedWord,
    check_deterministic,
    check_integer_reset,
    determinize,
    fuzz_equivalence,
    includes,
    is_empty,
    is_irta,
    member,
    parse_automaton,
    print_automaton,
    random_word,
    validate_wellformed,
)
from irta.cli import run_cli

GOLDEN_STATES = {
    "S1": "{(S,0)}",
    "S2": "{(S,0),(S,1)}",
    "S3": "{(S,1)}",
    "S4": "{(S,0),(S,1),(S,1+)}",
    "S5": "{(S,0),(S,1+)}",
    "S6": "{(S,1),(S,1+)}",
    "S7": "{(S,1+)}",
}

SEARCH_WORDS = 10_000


@contextmanager
def verdict(capsys, number, title):
    info = {}
    try:
        yield info
    except BaseException:
        with capsys.disabled():
            print(f"criterion {number} FAIL {title}")
        raise
    detail = f" ({info['detail']})" if info.get("detail") else ""
    with capsys.disabled():
        print(f"criterion {number} PASS {title}{detail}")


def no_accepted_word(a, seed, count=SEARCH_WORDS):
    """Seeded search for any accepted word; True when none is found."""
    rng = random.Random(seed)
    max_time = a.max_const + 4
    for _ in range(count):
        w = random_word(rng, a.alphabet, 8, max_time)
        if member(a, w):
            return False
    return True


def no_separating_word(a, b, seed, count=SEARCH_WORDS):
    """Seeded search for a word in L(a) but not L(b); True when none is found."""
    rng = random.Random(seed)
    max_time = max(a.max_const, b.max_const) + 4
    for _ in range(count):
        w = random_word(rng, a.alphabet, 8, max_time)
        if member(a, w) and not member(b, w):
            return False
    return True


def test_criterion_1_golden_determinization(capsys, loop_det_hand):
    with verdict(capsys, 1, "golden determinization") as info:
        start = perf_counter()
        a = parse_automaton((DATA / "loop.irta").read_text())
        det, state_map = determinize(a)
        elapsed = perf_counter() - start
        assert len(det.locations) == 7
        assert det.locations == tuple(f"S{i}" for i in range(1, 8))
        for name, pairs in GOLDEN_STATES.items():
            assert state_map[name].display(a.max_const) == pairs
        # edge-for-edge against the hand-written golden file, reset flags included
        rel = atomize(det)
        assert rel == atomize(loop_det_hand)
        point_one = 2  # region index of {1} for K = 1
        assert rel[("S1", "b", point_one)] == ("S2", True)
        assert rel[("S1", "c", point_one)][1] is True
        assert rel[("S1", "e", point_one)][1] is False
        assert elapsed < 1.0
        info["detail"] = f"7 states, {elapsed:.3f}s < 1s"


def test_criterion_2_symbolic_equality(capsys, loop_a, loop_det_hand):
    with verdict(capsys, 2, "symbolic language equality") as info:
        start = perf_counter()
        forward = includes(loop_a, loop_det_hand)
        backward = includes(loop_det_hand, loop_a)
        elapsed = perf_counter() - start
        assert forward == (True, None)
        assert backward == (True, None)
        assert elapsed < 5.0
        info["detail"] = f"both directions empty, {elapsed:.3f}s < 5s"


def test_criterion_3_statistical_equality(capsys, loop_a, loop_det):
    det, _ = loop_det
    with verdict(capsys, 3, "statistical language equality") as info:
        start = perf_counter()
        report = fuzz_equivalence(
            loop_a, det, seed=42, count=10_000, max_len=8, max_time=5,
            denominators=(1, 2, 3, 4),
        )
        elapsed = perf_counter() - start
        assert report.tried == 10_000
        assert report.ok, report.to_text()
        assert elapsed < 10.0
        info["detail"] = f"10000 words, 0 mismatches, {elapsed:.2f}s < 10s"


def test_criterion_4_validator(capsys, tmp_path, loop_a):
    with verdict(capsys, 4, "validator") as info:
        assert validate_wellformed(loop_a).ok
        assert check_integer_reset(loop_a).ok
        assert run_cli(["check", str(DATA / "loop.irta")]) == 0
        capsys.readouterr()

        mutated_line = "edge S -> S : b [x >= 1] reset x"
        text = (DATA / "loop.irta").read_text().replace(
            "edge S -> S : b [x >= 1]", mutated_line
        )
        mutated = tmp_path / "mutated.irta"
        mutated.write_text(text)
        offenders = check_integer_reset(parse_automaton(text)).offenders
        assert len(offenders) == 1
        assert offenders[0].letter == "b" and offenders[0].reset

        code = run_cli(["check", str(mutated)])
        out = capsys.readouterr().out
        assert code == 1
        assert mutated_line in out
        info["detail"] = "clean pass, mutated reset caught and named"


def test_criterion_5_output_checks_and_fuzz(capsys, corpus, corpus_dets):
    with verdict(capsys, 5, "determinized corpus checks") as info:
        assert len(corpus) == CORPUS_SIZE == 200
        for a in corpus:
            assert len(a.locations) <= 4
            assert a.max_const <= 2
        for i, (a, (det, _)) in enumerate(zip(corpus, corpus_dets)):
            assert check_deterministic(det).ok, a.name
            assert check_integer_reset(det).ok, a.name
            report = fuzz_equivalence(a, det, seed=i, count=1000)
            assert report.ok, f"{a.name}:\n{report.to_text()}"
        info["detail"] = "200 automata, 1000 words each, 0 mismatches"


def test_criterion_6_shared_fraction_invariant(capsys, loop_a, loop_det,
                                               corpus, corpus_dets):
    with verdict(capsys, 6, "shared-fractional-part invariant") as info:
        # The fuzz runs of criteria 3 and 5 assert the invariant after every
        # step: fuzz_equivalence turns the per-step check on for any side
        # that is an IRTA, which all of those inputs are.
        det, _ = loop_det
        assert is_irta(loop_a) and is_irta(det)
        for a, (d, _) in zip(corpus, corpus_dets):
            assert is_irta(a) and is_irta(d)

        # Explicit re-run on a sample with the per-step check forced on.
        rng = random.Random(606)
        for a in [loop_a, det] + corpus[:20]:
            for _ in range(200):
                w = random_word(rng, a.alphabet, 8, a.max_const + 4)
                member(a, w, check_shared_fraction=True)

        # Negative control: the checker does fire on a non-IRTA run.
        broken = replace(
            loop_a,
            edges=loop_a.edges + (Edge("S", "S", "e", Guard.true(), True),),
        )
        with pytest.raises(InvariantViolationError):
            member(
                broken,
                TimedWord((("e", Fraction(1, 2)), ("e", Fraction(3, 4)))),
                check_shared_fraction=True,
            )
        info["detail"] = "armed in criteria 3 and 5, zero violations"


def test_criterion_7_oracle_coherence(capsys, loop_a, corpus):
    with verdict(capsys, 7, "oracle coherence") as info:
        nonempty = searched = 0
        for i, a in enumerate(corpus):
            empty, witness = is_empty(a)
            if empty:
                assert no_accepted_word(a, seed=1000 + i)
                searched += 1
            else:
                assert member(a, witness)
                nonempty += 1
        assert nonempty + searched == len(corpus)

        # Inclusion verdicts: failed ones ship a word the simulator
        # confirms, affirmative ones survive the same word search.
        sub = replace(
            loop_a,
            edges=tuple(
                e for e in loop_a.edges
                if not (e.letter == "b" and not e.reset)
            ),
        )
        pairs = [(loop_a, sub), (sub, loop_a)]
        same_alphabet = [
            (corpus[i], corpus[i + 1])
            for i in range(0, 40, 2)
            if corpus[i].alphabet == corpus[i + 1].alphabet
        ]
        held = failed = 0
        for a, b in pairs + same_alphabet:
            ok, cex = includes(a, b)
            if ok:
                assert cex is None
                assert no_separating_word(a, b, seed=2000 + held)
                held += 1
            else:
                assert member(a, cex)
                assert not member(b, cex)
                failed += 1
        assert failed >= 1 and held >= 1
        info["detail"] = (
            f"{nonempty} witnesses confirmed, {searched} empties searched, "
            f"{failed} counterexamples confirmed, {held} inclusions searched"
        )


def test_criterion_8_round_trip(capsys, loop_a, loop_det_hand,
                                loop_det, corpus):
    with verdict(capsys, 8, "round-trip identity") as info:
        det, _ = loop_det
        subjects = [loop_a, loop_det_hand, det] + list(corpus)
        for a in subjects:
            assert parse_automaton(print_automaton(a)) == a
        info["detail"] = f"{len(subjects)} automata bit-exact"


def test_criterion_9_state_bound(capsys, corpus, corpus_dets):
    with verdict(capsys, 9, "determinized state bound") as info:
        worst = 0
        for a, (det, _) in zip(corpus, corpus_dets):
            bound = 2 ** (len(a.locations) * (a.max_const + 2)) - 1
            assert len(det.locations) <= bound
            worst = max(worst, len(det.locations))
        info["detail"] = f"max {worst} states, all within 2^(L(K+2))-1"
