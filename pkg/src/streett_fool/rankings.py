"""Q-rankings: a bijective numeric rank plus a per-state index permutation."""

from __future__ import annotations

import hashlib
import itertools
import json
import re
from dataclasses import dataclass
from math import factorial, log2
from typing import Iterator


@dataclass(frozen=True)
class QRanking:
    """``r[i]`` is the rank of ``q_i``; ``h[i]`` is the permutation attached to ``q_i``.

    Permutations are stored 0-based as tuples of 1-based indices, so
    ``h[i][j - 1]`` is the usual ``h(q_i)[j]``.
    """

    r: tuple[int, ...]
    h: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "r", tuple(self.r))
        object.__setattr__(self, "h", tuple(tuple(p) for p in self.h))
        n = len(self.r)
        if n < 1:
            raise ValueError("a Q-ranking needs at least one state")
        if sorted(self.r) != list(range(1, n + 1)):
            raise ValueError(f"r={list(self.r)} is not a bijection onto [1..{n}]")
        if len(self.h) != n:
            raise ValueError(f"h has {len(self.h)} entries, expected {n}")
        k = len(self.h[0])
        for i, perm in enumerate(self.h):
            if sorted(perm) != list(range(1, k + 1)) or k < 1:
                raise ValueError(f"h(q{i})={list(perm)} is not a permutation of [1..{k}]")

    @property
    def n(self) -> int:
        return len(self.r)

    @property
    def k(self) -> int:
        return len(self.h[0])

    def descending(self) -> list[int]:
        """Indices of Q ordered by strictly decreasing rank."""
        return sorted(range(self.n), key=lambda i: -self.r[i])

    def serialize(self) -> str:
        return format_ranking(self)

    def digest(self, length: int = 12) -> str:
        return hashlib.sha256(self.serialize().encode()).hexdigest()[:length]


def format_ranking(f: QRanking) -> str:
    r = ",".join(map(str, f.r))
    h = ",".join("[" + ",".join(map(str, p)) + "]" for p in f.h)
    return f"r=[{r}];h=[{h}]"


_RANKING_RE = re.compile(r"^\s*r\s*=\s*(\[.*?\])\s*;\s*h\s*=\s*(\[.*\])\s*$", re.S)


def parse_ranking(text: str) -> QRanking:
    m = _RANKING_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse ranking {text!r}")
    try:
        r = json.loads(m.group(1))
        h = json.loads(m.group(2))
    except json.JSONDecodeError as exc:
        raise ValueError(f"cannot parse ranking {text!r}") from exc
    return QRanking(tuple(r), tuple(tuple(p) for p in h))


def enumerate_q_rankings(n: int, k: int) -> Iterator[QRanking]:
    """Yield every Q-ranking for ``(n, k)`` once, lexicographically on ``r`` then ``h``."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be >= 1")
    perms_k = list(itertools.permutations(range(1, k + 1)))
    for r in itertools.permutations(range(1, n + 1)):
        for h in itertools.product(perms_k, repeat=n):
            yield QRanking(r, h)


def count_q_rankings(n: int, k: int) -> int:
    if n < 1 or k < 1:
        raise ValueError("n and k must be >= 1")
    return factorial(n) * factorial(k) ** n


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    n0: int
    k0: int
    ranking_count: int
    regime: str

    def __post_init__(self):
        assert self.n == 2 * self.k0 + self.n0 + 1
        assert self.ranking_count == factorial(self.n0) * factorial(self.k0) ** self.n0

    @property
    def log2_count(self) -> float:
        return log2(self.ranking_count)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "n0": self.n0,
            "k0": self.k0,
            "ranking_count": str(self.ranking_count),
            "regime": self.regime,
        }


def lower_bound_report(n: int, k: int) -> BoundReport:
    """Split an instance of size ``(n, k)`` into an embedded family member ``(n0, k0)``.

    The embedded automaton uses ``n = 2*k0 + n0 + 1`` states; its index is
    padded with empty pairs up to ``k``. We take ``k0 = min(k, (n - 1) // 3)``,
    which keeps ``n0 >= k0`` and reduces to ``k0 = n0`` when ``k`` is large.
    """
    if n < 4:
        raise ValueError(f"n={n} is too small: need n >= 4 to embed n0, k0 >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    k0 = min(k, (n - 1) // 3)
    n0 = n - 2 * k0 - 1
    regime = "k_O_of_n" if 3 * k + 2 <= n else "k_omega_of_n"
    return BoundReport(n, k, n0, k0, count_q_rankings(n0, k0), regime)
