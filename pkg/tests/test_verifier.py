import random

import pytest

from streett_fool.builder import build_q_word
from streett_fool.core import (
    T_STATE,
    FiniteWord,
    Letter,
    Role,
    b,
    build_full_streett,
    empty_word,
    g,
    q,
    states_of,
)
from streett_fool.rankings import QRanking, enumerate_q_rankings
from streett_fool.verifier import (
    PATH_CAP_ENV,
    PathCapExceeded,
    PropertyReport,
    check_property_1,
    check_property_2,
    check_property_3,
    check_property_4,
    count_full_paths,
    default_path_cap,
    enumerate_full_paths,
    verify_q_word,
)

import oracles
from conftest import q_words


def by_name(reports):
    return {r.property: r for r in reports}


class TestPathEnumeration:
    @pytest.mark.parametrize("n,k", [(1, 1), (2, 1), (2, 2), (3, 2)])
    def test_counts_match_matrix_oracle(self, n, k):
        states = states_of(n, k)
        for _, w in q_words(n, k):
            m = oracles.path_count_matrix(w)
            for i, s in enumerate(states):
                for j, d in enumerate(states):
                    assert len(enumerate_full_paths(w, s, d)) == m[i, j] == count_full_paths(w, s, d)

    def test_random_words_match_oracle(self):
        rng = random.Random(11)
        states = states_of(2, 2)
        for _ in range(40):
            w = FiniteWord(2, 2, tuple(oracles.random_letter(rng, 2, 2, 0.3) for _ in range(rng.randint(1, 5))))
            m = oracles.path_count_matrix(w)
            for i, s in enumerate(states):
                for j, d in enumerate(states):
                    assert count_full_paths(w, s, d) == m[i, j]

    def test_paths_are_runs(self, worked_word):
        for s in states_of(3, 2):
            for d in states_of(3, 2):
                for p in enumerate_full_paths(worked_word, s, d):
                    assert p.is_run_of(lambda lv: worked_word.letters[lv])
                    assert (p.states[0], p.states[-1]) == (s, d)
                    assert p.end_level == 24

    def test_lexicographic_order(self):
        letter = Letter(tuple((s, d) for s in states_of(1, 1) for d in states_of(1, 1)))
        w = FiniteWord(1, 1, (letter, letter))
        paths = [p.states for p in enumerate_full_paths(w, q(0), T_STATE)]
        assert paths == sorted(paths) and len(paths) == 4

    def test_empty_word(self):
        e = empty_word(2, 1)
        assert [p.states for p in enumerate_full_paths(e, q(0), q(0))] == [(q(0),)]
        assert enumerate_full_paths(e, q(0), q(1)) == []

    def test_worked_q1_track(self, worked_word):
        paths = enumerate_full_paths(worked_word, q(1), q(1))
        assert len(paths) == 2
        assert {p.states[14] for p in paths} == {q(1), g(1)}

    def test_cap(self):
        letter = Letter(tuple((s, d) for s in states_of(1, 1) for d in states_of(1, 1)))
        w = FiniteWord(1, 1, (letter,) * 6)
        assert count_full_paths(w, q(0), q(0)) == 4**5
        with pytest.raises(PathCapExceeded):
            enumerate_full_paths(w, q(0), q(0), cap=100)
        assert len(enumerate_full_paths(w, q(0), q(0), cap=4**5)) == 4**5

    def test_cap_from_environment(self, monkeypatch):
        monkeypatch.setenv(PATH_CAP_ENV, "7")
        assert default_path_cap() == 7
        monkeypatch.delenv(PATH_CAP_ENV)
        assert default_path_cap() == 10**6


class TestWorkedWord:
    def test_all_hold(self, worked_word, worked):
        assert all(r.holds for r in verify_q_word(worked_word, worked))

    def test_ranking_taken_from_word(self, worked_word):
        assert all(r.holds for r in verify_q_word(worked_word))

    def test_p1_witness_for_top_to_bottom(self, worked_word, worked):
        rep = check_property_1(worked_word, worked)
        top = [w for w in rep.witnesses if w.path.states[0] == q(2) and w.path.states[-1] == q(1)]
        assert len(top) == 1
        states = top[0].path.states
        assert (states[1], states[2], states[4], states[5]) == (b(1), b(2), b(1), b(2))
        assert top[0].visited_B == {1, 2}

    def test_p1_witness_count(self, worked_word, worked):
        # one witness per ordered pair with strictly decreasing rank
        assert len(check_property_1(worked_word, worked).witnesses) == 3

    def test_p2_profiles(self, worked_word, worked):
        rep = check_property_2(worked_word, worked)
        assert rep.details["path_counts"] == {"q0": 2, "q1": 2, "q2": 2}
        profiles = [(w.path.states[0], sorted(w.visited_G), sorted(w.visited_B)) for w in rep.witnesses]
        assert profiles == [
            (q(0), [1], [2]), (q(0), [2], []),
            (q(1), [1], [2]), (q(1), [2], []),
            (q(2), [2], [1]), (q(2), [1], []),
        ]

    def test_report_serializes(self, worked_word, worked):
        d = check_property_2(worked_word, worked).to_dict()
        assert d["holds"] is True and len(d["witnesses"]) == 6
        assert d["witnesses"][0]["path"][0] == "q0@0"


class TestFailures:
    def test_p3_bypass_letter(self):
        bypass = Letter(((q(0), q(0)), (T_STATE, T_STATE)))
        rep = check_property_3(FiniteWord(1, 1, (bypass,)))
        assert not rep.holds
        assert rep.counterexample["first_level_sources"] == ["t"]
        assert rep.counterexample["last_level_targets"] == ["t"]

    def test_p3_empty_word(self):
        with pytest.raises(ValueError):
            check_property_3(empty_word(2, 1))

    def test_p4_reversed_ranking(self, worked_word):
        # claim q1 outranks q2 while the word lets q2 reach q1
        wrong = QRanking((2, 3, 1), ((1, 2), (1, 2), (2, 1)))
        rep = check_property_4(worked_word, wrong)
        assert not rep.holds
        path = rep.counterexample.path
        assert wrong.r[path.states[0].index] < wrong.r[path.states[-1].index]

    def test_p1_fails_with_wrong_ranking(self, worked_word):
        wrong = QRanking((1, 2, 3), ((1, 2), (1, 2), (2, 1)))
        assert not check_property_1(worked_word, wrong).holds

    def test_p2_detects_missing_return_edge(self, aut32, worked):
        w = build_q_word(aut32, worked)
        # level 11 is TTo-Q(0), the only way back to q0 after its horizontal edge is cut
        assert (T_STATE, q(0)) in w.letters[11]
        broken = w.replace(11, w.letters[11].without((T_STATE, q(0))))
        rep = check_property_2(broken, worked)
        assert not rep.holds
        assert rep.counterexample["path_count"] == 0

    def test_p2_detects_wrong_obligation(self, worked_word):
        wrong = QRanking((2, 1, 3), ((2, 1), (1, 2), (2, 1)))
        assert not check_property_2(worked_word, wrong).holds

    def test_failing_report_needs_counterexample(self):
        with pytest.raises(ValueError):
            PropertyReport("P1", False)

    def test_shape_check(self, worked_word):
        with pytest.raises(ValueError):
            check_property_4(worked_word, QRanking((1, 2), ((1, 2), (1, 2))))


def test_single_state_vacuous_properties():
    aut = build_full_streett(1, 1)
    f = QRanking((1,), ((1,),))
    w = build_q_word(aut, f)
    reps = by_name(verify_q_word(w, f))
    assert reps["P1"].holds and not reps["P1"].witnesses
    assert reps["P4"].holds
    assert reps["P2"].holds


def test_witness_paths_only_use_roles_on_track(worked_word, worked):
    for rep in verify_q_word(worked_word, worked):
        for w in rep.witnesses:
            assert w.path.states[0].role is Role.Q and w.path.states[-1].role is Role.Q


def test_properties_for_all_2_2_rankings():
    for f in enumerate_q_rankings(2, 2):
        w = build_q_word(build_full_streett(2, 2), f)
        assert all(r.holds for r in verify_q_word(w, f))
