import itertools
from math import factorial

import pytest

from streett_fool.rankings import (
    QRanking,
    count_q_rankings,
    enumerate_q_rankings,
    format_ranking,
    lower_bound_report,
    parse_ranking,
)


def test_count_example():
    assert count_q_rankings(3, 2) == 48


def test_count_trivial():
    assert count_q_rankings(1, 1) == 1


def test_count_4_3():
    assert count_q_rankings(4, 3) == 24 * 6**4 == 31104


def test_count_is_exact_for_large_inputs():
    assert count_q_rankings(20, 15) == factorial(20) * factorial(15) ** 20


def test_single_ranking_at_1_1():
    assert list(enumerate_q_rankings(1, 1)) == [QRanking((1,), ((1,),))]


@pytest.mark.parametrize("n,k", [(1, 1), (2, 1), (2, 2), (3, 2), (2, 3), (3, 3), (4, 2)])
def test_enumeration_matches_count(n, k):
    seen = {f.serialize() for f in enumerate_q_rankings(n, k)}
    assert len(seen) == count_q_rankings(n, k)


def test_2_3_distinct():
    rankings = list(enumerate_q_rankings(2, 3))
    assert len(rankings) == 72 == 2 * 6**2
    assert len(set(rankings)) == 72


def test_enumeration_is_lexicographic():
    rankings = list(enumerate_q_rankings(3, 2))
    keys = [(f.r, f.h) for f in rankings]
    assert keys == sorted(keys)
    assert rankings[0] == QRanking((1, 2, 3), ((1, 2),) * 3)


def test_enumeration_is_lazy():
    first = next(iter(enumerate_q_rankings(8, 6)))
    assert first.r == tuple(range(1, 9))


def test_invariants_hold_for_every_ranking():
    for f in enumerate_q_rankings(3, 3):
        assert sorted(f.r) == [1, 2, 3]
        assert all(sorted(p) == [1, 2, 3] for p in f.h)


@pytest.mark.parametrize("r,h", [
    ((1, 1, 2), ((1, 2),) * 3),
    ((1, 2, 4), ((1, 2),) * 3),
    ((1, 2), ((1, 1), (1, 2))),
    ((1, 2), ((1, 2),)),
    ((1, 2), ((1, 2), (1, 2, 3))),
])
def test_invalid_rankings(r, h):
    with pytest.raises(ValueError):
        QRanking(r, h)


def test_serialization_format(worked):
    assert format_ranking(worked) == "r=[2,1,3];h=[[1,2],[1,2],[2,1]]"


def test_serialization_roundtrip():
    for f in enumerate_q_rankings(3, 2):
        assert parse_ranking(format_ranking(f)) == f


def test_parse_tolerates_spaces():
    assert parse_ranking(" r = [2, 1] ; h = [[1], [1]] ") == QRanking((2, 1), ((1,), (1,)))


@pytest.mark.parametrize("text", ["", "r=[1]", "r=[1];h=[[1]", "h=[[1]];r=[1]"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_ranking(text)


def test_descending_order(worked):
    assert worked.descending() == [2, 0, 1]


class TestLowerBoundReport:
    def test_9_2(self):
        rep = lower_bound_report(9, 2)
        assert (rep.k0, rep.n0, rep.ranking_count) == (2, 4, 384)
        assert rep.regime == "k_O_of_n"
        # cross-check the formula by enumeration at the embedded size
        assert rep.ranking_count == sum(1 for _ in enumerate_q_rankings(4, 2))

    def test_4_1(self):
        rep = lower_bound_report(4, 1)
        assert (rep.k0, rep.n0, rep.ranking_count) == (1, 1, 1)

    def test_13_100(self):
        rep = lower_bound_report(13, 100)
        assert rep.regime == "k_omega_of_n"
        assert rep.k0 == rep.n0 == 4
        assert rep.ranking_count == factorial(4) * factorial(4) ** 4

    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_too_small(self, n):
        with pytest.raises(ValueError):
            lower_bound_report(n, 1)

    def test_invariant_on_grid(self):
        for n, k in itertools.product(range(4, 40), range(1, 30)):
            rep = lower_bound_report(n, k)
            assert rep.n == 2 * rep.k0 + rep.n0 + 1
            assert 1 <= rep.k0 <= k
            assert rep.n0 >= rep.k0
