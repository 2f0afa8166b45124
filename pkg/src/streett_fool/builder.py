"""Canonical Q-word construction: an R-word followed by an H-word.

Every letter is Id(Q) plus one special edge, optionally plus the bypass
edge ``t>t``, with the ``To-`` kinds cutting selected horizontal edges.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import (
    T_STATE,
    FiniteWord,
    FullStreettAutomaton,
    Letter,
    ShapeMismatch,
    b,
    concat,
    g,
    q,
)
from .rankings import QRanking


class LetterKind(enum.Enum):
    IdQ = "Id(Q)"
    IdT = "Id(T)"
    QToB = "Q({0})ToB({1})"
    BToB = "B({0})ToB({1})"
    BToQ = "B({0})ToQ({1})"
    BToG = "B({0})ToG({1})"
    QToG = "Q({0})ToG({1})"
    GToT = "G({0})ToT"
    QToMinusG = "Q({0})To-G({1})"
    GToMinusT = "G({0})To-T"
    TToMinusQ = "TTo-Q({0})"


@dataclass(frozen=True)
class LetterTemplate:
    """A named letter. ``bypass`` adds the ``t>t`` edge.

    ``GToMinusT`` carries two parameters, the G index and the Q index
    whose horizontal edge is removed.
    """

    kind: LetterKind
    params: tuple[int, ...] = ()
    bypass: bool = True

    def __str__(self) -> str:
        if self.kind is LetterKind.GToMinusT:
            return self.kind.value.format(self.params[0])
        return self.kind.value.format(*self.params)

    def instantiate(self, n: int) -> Letter:
        kind, p = self.kind, self.params
        if kind is LetterKind.IdT:
            return Letter(((T_STATE, T_STATE),))
        edges = {(q(i), q(i)) for i in range(n)}
        if self.bypass and kind is not LetterKind.TToMinusQ:
            edges.add((T_STATE, T_STATE))
        if kind is LetterKind.QToB:
            edges.add((q(p[0]), b(p[1])))
        elif kind is LetterKind.BToB:
            edges.add((b(p[0]), b(p[1])))
        elif kind is LetterKind.BToQ:
            edges.add((b(p[0]), q(p[1])))
        elif kind is LetterKind.BToG:
            edges.add((b(p[0]), g(p[1])))
        elif kind is LetterKind.QToG:
            edges.add((q(p[0]), g(p[1])))
        elif kind is LetterKind.GToT:
            edges.add((g(p[0]), T_STATE))
        elif kind is LetterKind.QToMinusG:
            edges.add((q(p[0]), g(p[1])))
            edges.discard((q(p[0]), q(p[0])))
        elif kind is LetterKind.GToMinusT:
            edges.add((g(p[0]), T_STATE))
            edges.discard((q(p[1]), q(p[1])))
        elif kind is LetterKind.TToMinusQ:
            edges.add((T_STATE, q(p[0])))
            edges.discard((q(p[0]), q(p[0])))
        return Letter(tuple(edges))


def _word(aut: FullStreettAutomaton, templates: list[LetterTemplate]) -> FiniteWord:
    return FiniteWord(aut.n, aut.k, tuple(t.instantiate(aut.n) for t in templates))


def r_word_templates(aut: FullStreettAutomaton, r) -> list[LetterTemplate]:
    n, k = aut.n, aut.k
    r = tuple(r)
    if sorted(r) != list(range(1, n + 1)):
        raise ValueError(f"r={list(r)} is not a bijection Q -> [1..{n}]")
    order = sorted(range(n), key=lambda i: -r[i])
    out = []
    # R-word letters carry no t>t edge.
    for m_i, m_next in zip(order, order[1:]):
        out.append(LetterTemplate(LetterKind.QToB, (m_i, 1), bypass=False))
        out.extend(LetterTemplate(LetterKind.BToB, (j, j + 1), bypass=False) for j in range(1, k))
        out.append(LetterTemplate(LetterKind.BToQ, (k, m_next), bypass=False))
    return out


def h_segment_templates(i: int, perm: tuple[int, ...], j: int) -> list[LetterTemplate]:
    """Letters of segment ``(i, j)``: the stretch where path ``j`` of ``q_i`` leaves its track."""
    k = len(perm)
    hj = perm[j - 1]
    if j < k:
        out = [LetterTemplate(LetterKind.QToB, (i, perm[j]))]
        out.extend(LetterTemplate(LetterKind.BToB, (perm[x - 1], perm[x])) for x in range(j + 1, k))
        out.append(LetterTemplate(LetterKind.BToG, (perm[k - 1], hj)))
        out.append(LetterTemplate(LetterKind.GToT, (hj,)))
        return out
    return [
        LetterTemplate(LetterKind.QToMinusG, (i, hj)),
        LetterTemplate(LetterKind.GToMinusT, (hj, i)),
        LetterTemplate(LetterKind.TToMinusQ, (i,)),
    ]


def h_word_templates(aut: FullStreettAutomaton, h) -> list[LetterTemplate]:
    n, k = aut.n, aut.k
    h = tuple(tuple(p) for p in h)
    if len(h) != n:
        raise ValueError(f"h has {len(h)} entries, expected {n}")
    for i, perm in enumerate(h):
        if sorted(perm) != list(range(1, k + 1)):
            raise ValueError(f"h(q{i})={list(perm)} is not a permutation of [1..{k}]")
    out = []
    for i in range(n):
        for j in range(1, k + 1):
            out.extend(h_segment_templates(i, h[i], j))
    return out


def build_r_word(aut: FullStreettAutomaton, r) -> FiniteWord:
    return _word(aut, r_word_templates(aut, r))


def build_h_word(aut: FullStreettAutomaton, h) -> FiniteWord:
    return _word(aut, h_word_templates(aut, h))


def build_q_word(aut: FullStreettAutomaton, f: QRanking) -> FiniteWord:
    if (f.n, f.k) != (aut.n, aut.k):
        raise ShapeMismatch(f"ranking shape {(f.n, f.k)} does not match automaton {aut.shape}")
    w = concat(build_r_word(aut, f.r), build_h_word(aut, f.h))
    return FiniteWord(w.n, w.k, w.letters, ranking=f)


def q_word_templates(aut: FullStreettAutomaton, f: QRanking) -> list[LetterTemplate]:
    return r_word_templates(aut, f.r) + h_word_templates(aut, f.h)
