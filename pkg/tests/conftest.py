from pathlib import Path

import pytest

from streett_fool.builder import build_q_word
from streett_fool.core import build_full_streett, read_word
from streett_fool.rankings import QRanking, enumerate_q_rankings

FIXTURES = Path(__file__).parent / "fixtures"

# running 3-state, 2-pair ranking: r(q0)=2, r(q1)=1, r(q2)=3; h(q0)=h(q1)=<1,2>, h(q2)=<2,1>
WORKED = QRanking((2, 1, 3), ((1, 2), (1, 2), (2, 1)))

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def worked():
    return WORKED


@pytest.fixture
def aut32():
    return build_full_streett(3, 2)


@pytest.fixture
def worked_word(aut32):
    return build_q_word(aut32, WORKED)


@pytest.fixture
def golden_word():
    return read_word(FIXTURES / "worked_3_2.fsw")


def q_words(n, k):
    aut = build_full_streett(n, k)
    return [(f, build_q_word(aut, f)) for f in enumerate_q_rankings(n, k)]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
