import re

from streett_fool.core import empty_word
from streett_fool.dot import row_order, to_dot, write_dot


def vertices(text):
    return set(re.findall(r"^\s+(\w+_\d+)(?: \[xlabel=\"\w+\"\])?;$", text, re.M))


def visible_edges(text):
    return [line for line in text.splitlines() if "->" in line and "invis" not in line]


def test_worked_grid(worked_word):
    text = to_dot(worked_word)
    vs = vertices(text)
    assert len(vs) == 25 * 8
    assert len({v.rsplit("_", 1)[1] for v in vs}) == 25
    assert text.count("rank=same") == 25


def test_row_order():
    assert [str(s) for s in row_order(3, 2)] == ["g2", "g1", "b2", "b1", "q0", "q1", "q2", "t"]


def test_edges_match_word(worked_word):
    edges = visible_edges(to_dot(worked_word))
    assert len(edges) == worked_word.num_edges()
    assert "  q2_0 -> b1_1;" in edges


def test_empty_word_single_column():
    text = to_dot(empty_word(2, 1))
    assert len(vertices(text)) == 5
    assert visible_edges(text) == []


def test_deterministic(worked_word, tmp_path):
    write_dot(worked_word, tmp_path / "a.dot")
    write_dot(worked_word, tmp_path / "b.dot")
    assert (tmp_path / "a.dot").read_text() == (tmp_path / "b.dot").read_text()
    assert (tmp_path / "a.dot").read_text().startswith("digraph qword {")
