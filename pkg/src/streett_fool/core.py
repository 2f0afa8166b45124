"""State space, letters, words and the full Streett automaton family.

A full automaton has the alphabet 2^(S x S): every letter is itself a unit
run graph, so a finite word is the same thing as a layered run graph
("Delta-graph") whose level ``l`` is connected to level ``l + 1`` by the
edges of letter ``l``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence


class Role(enum.IntEnum):
    Q = 0
    G = 1
    B = 2
    T = 3


class StateId(NamedTuple):
    """A state of a full Streett automaton.

    Tuples order role-major, index-minor, which yields the canonical
    ordering ``q0..q(n-1), g1..gk, b1..bk, t``.
    """

    role: Role
    index: int = 0

    @property
    def name(self) -> str:
        if self.role is Role.T:
            return "t"
        return f"{self.role.name.lower()}{self.index}"

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return self.name


def q(i: int) -> StateId:
    return StateId(Role.Q, i)


def g(i: int) -> StateId:
    return StateId(Role.G, i)


def b(i: int) -> StateId:
    return StateId(Role.B, i)


T_STATE = StateId(Role.T, 0)

_ROLE_PREFIX = {"q": Role.Q, "g": Role.G, "b": Role.B}


def parse_state(name: str) -> StateId:
    name = name.strip()
    if name == "t":
        return T_STATE
    role = _ROLE_PREFIX.get(name[:1])
    if role is None or not name[1:].isdigit():
        raise WordFormatError(f"bad state name {name!r}")
    return StateId(role, int(name[1:]))


def states_of(n: int, k: int) -> tuple[StateId, ...]:
    """All states for parameters ``(n, k)`` in canonical order."""
    return (
        tuple(q(i) for i in range(n))
        + tuple(g(i) for i in range(1, k + 1))
        + tuple(b(i) for i in range(1, k + 1))
        + (T_STATE,)
    )


def is_valid_state(s: StateId, n: int, k: int) -> bool:
    if s.role is Role.Q:
        return 0 <= s.index < n
    if s.role in (Role.G, Role.B):
        return 1 <= s.index <= k
    return s.index == 0


class WordFormatError(ValueError):
    """Raised when a word, letter or state cannot be parsed."""


class ShapeMismatch(ValueError):
    """Raised when objects built for different ``(n, k)`` are combined."""


Edge = tuple[StateId, StateId]
Pair = tuple[frozenset, frozenset]


@dataclass(frozen=True)
class FullStreettAutomaton:
    """Member ``(n, k)`` of the full Streett family.

    ``k`` is the size of the G/B state pools and fixes the state set
    ``|S| = n + 2k + 1``. ``pairs`` is the acceptance condition; it has
    ``k`` entries ``({g_i}, {b_i})`` unless the index was padded with
    empty pairs by :func:`pad_index`.
    """

    n: int
    k: int
    pairs: tuple[Pair, ...]
    initial: frozenset = field(default=frozenset(), compare=False)

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise ValueError(f"full Streett automaton needs n, k >= 1 (got n={self.n}, k={self.k})")
        if not self.initial:
            object.__setattr__(self, "initial", frozenset(q(i) for i in range(self.n)))
        seen_b = set()
        for good, bad in self.pairs:
            for s in good | bad:
                if not is_valid_state(s, self.n, self.k):
                    raise ValueError(f"pair state {s} outside S for (n={self.n}, k={self.k})")
            if bad:
                if bad in seen_b:
                    raise ValueError("B must be injective on non-empty pairs")
                seen_b.add(bad)

    @property
    def states(self) -> tuple[StateId, ...]:
        return states_of(self.n, self.k)

    @property
    def index_size(self) -> int:
        return len(self.pairs)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n, self.k)


def build_full_streett(n: int, k: int) -> FullStreettAutomaton:
    if n < 1 or k < 1:
        raise ValueError(f"family is defined for n, k >= 1 (got n={n}, k={k})")
    pairs = tuple((frozenset({g(i)}), frozenset({b(i)})) for i in range(1, k + 1))
    return FullStreettAutomaton(n, k, pairs)


def pad_index(aut: FullStreettAutomaton, k_new: int) -> FullStreettAutomaton:
    """Extend the index set to ``[1..k_new]`` with ``(empty, empty)`` pairs.

    The state set is left alone. Empty pairs are vacuously satisfied by
    every run, so the accepted language does not change.
    """
    if k_new < aut.index_size:
        raise ValueError(f"cannot pad index of size {aut.index_size} down to {k_new}")
    extra = tuple((frozenset(), frozenset()) for _ in range(k_new - aut.index_size))
    return FullStreettAutomaton(aut.n, aut.k, aut.pairs + extra, aut.initial)


@dataclass(frozen=True)
class Letter:
    """A unit run graph: a relation on S, kept as a sorted edge tuple."""

    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(set(self.edges))))

    @classmethod
    def of(cls, edges: Iterable[Edge]) -> "Letter":
        return cls(tuple(edges))

    def __contains__(self, edge) -> bool:
        return edge in self.edges

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def without(self, edge: Edge) -> "Letter":
        return Letter(tuple(e for e in self.edges if e != edge))

    def with_edge(self, edge: Edge) -> "Letter":
        return Letter(self.edges + (edge,))


def identity_letter(states: Iterable[StateId]) -> Letter:
    return Letter(tuple((s, s) for s in states))


def format_letter(letter: Letter) -> str:
    return ",".join(f"{s}>{d}" for s, d in letter.edges)


def parse_letter(text: str) -> Letter:
    text = text.strip()
    if not text:
        return Letter()
    edges = []
    for token in text.split(","):
        src, sep, dst = token.partition(">")
        if not sep:
            raise WordFormatError(f"bad edge token {token!r}")
        edges.append((parse_state(src), parse_state(dst)))
    return Letter(tuple(edges))


@dataclass(frozen=True)
class FiniteWord:
    """A finite word over the full alphabet for parameters ``(n, k)``.

    ``ranking`` is optional bookkeeping (the Q-ranking a builder used);
    it takes no part in equality.
    """

    n: int
    k: int
    letters: tuple[Letter, ...] = ()
    ranking: object = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            for s, d in letter.edges:
                if not (is_valid_state(s, self.n, self.k) and is_valid_state(d, self.n, self.k)):
                    raise ValueError(f"edge {s}>{d} is not over S for (n={self.n}, k={self.k})")

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n, self.k)

    @property
    def num_levels(self) -> int:
        return len(self.letters) + 1

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, level: int) -> Letter:
        return self.letters[level]

    def __add__(self, other: "FiniteWord") -> "FiniteWord":
        return concat(self, other)

    def __mul__(self, times: int) -> "FiniteWord":
        return FiniteWord(self.n, self.k, self.letters * times)

    def replace(self, level: int, letter: Letter) -> "FiniteWord":
        letters = list(self.letters)
        letters[level] = letter
        return FiniteWord(self.n, self.k, tuple(letters), self.ranking)

    def num_edges(self) -> int:
        return sum(len(letter) for letter in self.letters)


def empty_word(n: int, k: int) -> FiniteWord:
    return FiniteWord(n, k, ())


def concat(w1: FiniteWord, w2: FiniteWord) -> FiniteWord:
    """Concatenate two words; the last level of ``w1`` merges with the first of ``w2``."""
    if w1.shape != w2.shape:
        raise ShapeMismatch(f"cannot concatenate words of shapes {w1.shape} and {w2.shape}")
    return FiniteWord(w1.n, w1.k, w1.letters + w2.letters)


def concat_all(n: int, k: int, words: Iterable[FiniteWord]) -> FiniteWord:
    out = empty_word(n, k)
    for w in words:
        out = concat(out, w)
    return out


def delta_graph_edges(w: FiniteWord, level: int) -> frozenset:
    """Edges between ``level`` and ``level + 1`` as pairs of ``(state, level)`` vertices."""
    if not 0 <= level < len(w):
        raise IndexError(f"level {level} out of range for word of length {len(w)}")
    return frozenset(((s, level), (d, level + 1)) for s, d in w.letters[level].edges)


@dataclass(frozen=True)
class LassoWord:
    """The ultimately periodic word ``prefix . period^omega``."""

    prefix: FiniteWord
    period: FiniteWord

    def __post_init__(self):
        if len(self.period) == 0:
            raise ValueError("lasso period must be non-empty")
        if self.prefix.shape != self.period.shape:
            raise ShapeMismatch("prefix and period have different (n, k)")

    @property
    def shape(self) -> tuple[int, int]:
        return self.period.shape

    def letter_at(self, level: int) -> Letter:
        u = len(self.prefix)
        if level < u:
            return self.prefix.letters[level]
        return self.period.letters[(level - u) % len(self.period)]

    def position(self, level: int) -> int:
        """Map an absolute level to its position in ``prefix + period``."""
        u = len(self.prefix)
        if level < u:
            return level
        return u + (level - u) % len(self.period)


@dataclass(frozen=True)
class RunPath:
    """A finite run segment: ``states[i]`` sits at level ``start_level + i``."""

    states: tuple[StateId, ...]
    start_level: int = 0

    @property
    def end_level(self) -> int:
        return self.start_level + len(self.states) - 1

    def edges(self) -> Iterator[tuple[int, Edge]]:
        for i in range(len(self.states) - 1):
            yield self.start_level + i, (self.states[i], self.states[i + 1])

    def is_run_of(self, letter_at) -> bool:
        """Check every step against ``letter_at(level)``, a callable returning a Letter."""
        return all(edge in letter_at(level) for level, edge in self.edges())

    def format(self) -> list[str]:
        return [f"{s}@{self.start_level + i}" for i, s in enumerate(self.states)]


# -- word file format -----------------------------------------------------

def format_word(w: FiniteWord) -> str:
    lines = [f"fsw n={w.n} k={w.k} len={len(w)}"]
    lines.extend(format_letter(letter) for letter in w.letters)
    return "\n".join(lines) + "\n"


def parse_word(text: str) -> FiniteWord:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise WordFormatError("missing header")
    header = lines[0].split()
    if not header or header[0] != "fsw":
        raise WordFormatError(f"bad header {lines[0]!r}")
    try:
        fields = dict(item.split("=", 1) for item in header[1:])
        n, k, length = int(fields["n"]), int(fields["k"]), int(fields["len"])
    except (KeyError, ValueError) as exc:
        raise WordFormatError(f"bad header {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != length:
        raise WordFormatError(f"header says len={length} but found {len(body)} letter lines")
    try:
        return FiniteWord(n, k, tuple(parse_letter(line) for line in body))
    except WordFormatError:
        raise
    except ValueError as exc:
        raise WordFormatError(str(exc)) from exc


def read_word(path) -> FiniteWord:
    with open(path, encoding="utf-8") as fh:
        return parse_word(fh.read())


def write_word(w: FiniteWord, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_word(w))


def all_edges(states: Sequence[StateId]) -> list[Edge]:
    return [(s, d) for s in states for d in states]
