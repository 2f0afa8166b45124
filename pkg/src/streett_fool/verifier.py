"""Check the four Q-word path properties on a finite run graph.

All checks enumerate full paths exactly. The run graph is a layered DAG,
so enumeration always terminates; a path cap guards against inputs
with exponentially many paths.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Optional

from .core import FiniteWord, Role, RunPath, StateId, q
from .rankings import QRanking

DEFAULT_PATH_CAP = 10**6
PATH_CAP_ENV = "STREETT_FOOL_PATH_CAP"


class PathCapExceeded(RuntimeError):
    pass


def default_path_cap() -> int:
    value = os.environ.get(PATH_CAP_ENV)
    return int(value) if value else DEFAULT_PATH_CAP


@dataclass(frozen=True)
class PathVisitProfile:
    path: RunPath
    visited_G: frozenset
    visited_B: frozenset

    @classmethod
    def of(cls, path: RunPath) -> "PathVisitProfile":
        return cls(
            path,
            frozenset(s.index for s in path.states if s.role is Role.G),
            frozenset(s.index for s in path.states if s.role is Role.B),
        )

    def to_dict(self) -> dict:
        return {
            "path": self.path.format(),
            "visited_G": sorted(self.visited_G),
            "visited_B": sorted(self.visited_B),
        }


@dataclass(frozen=True)
class PropertyReport:
    property: str
    holds: bool
    witnesses: tuple[PathVisitProfile, ...] = ()
    counterexample: Optional[object] = None
    details: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not self.holds and self.counterexample is None:
            raise ValueError("a failing report needs a counterexample")

    def to_dict(self) -> dict:
        cex = self.counterexample
        if isinstance(cex, PathVisitProfile):
            cex = cex.to_dict()
        return {
            "property": self.property,
            "holds": self.holds,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "counterexample": cex,
        }


def _successors(w: FiniteWord) -> list[dict]:
    levels = []
    for letter in w.letters:
        succ: dict = {}
        for s, d in letter.edges:
            succ.setdefault(s, []).append(d)
        levels.append(succ)
    return levels


def _alive(w: FiniteWord, targets: set) -> list[set]:
    """``alive[l]``: states at level ``l`` that reach some target at the last level."""
    alive = [set() for _ in range(len(w) + 1)]
    alive[-1] = set(targets)
    for level in range(len(w) - 1, -1, -1):
        nxt = alive[level + 1]
        alive[level] = {s for s, d in w.letters[level].edges if d in nxt}
    return alive


def enumerate_full_paths(
    w: FiniteWord, src: StateId, dst: StateId, cap: Optional[int] = None
) -> list[RunPath]:
    """All paths from ``<src, 0>`` to ``<dst, |w|>``, in canonical (lexicographic) order."""
    cap = default_path_cap() if cap is None else cap
    if len(w) == 0:
        return [RunPath((src,), 0)] if src == dst else []
    succ = _successors(w)
    alive = _alive(w, {dst})
    if src not in alive[0]:
        return []
    out: list[RunPath] = []
    last = len(w)
    stack = [(0, (src,))]
    while stack:
        level, prefix = stack.pop()
        if level == last:
            out.append(RunPath(prefix, 0))
            if len(out) > cap:
                raise PathCapExceeded(f"more than {cap} full paths from {src} to {dst}")
            continue
        nxt = alive[level + 1]
        for d in sorted(succ[level].get(prefix[-1], ()), reverse=True):
            if d in nxt:
                stack.append((level + 1, prefix + (d,)))
    return out


def count_full_paths(w: FiniteWord, src: StateId, dst: StateId) -> int:
    """Number of full paths, by dynamic programming over levels."""
    counts = {src: 1}
    for letter in w.letters:
        nxt: dict = {}
        for s, d in letter.edges:
            if s in counts:
                nxt[d] = nxt.get(d, 0) + counts[s]
        counts = nxt
    return counts.get(dst, 0)


def _shape_check(w: FiniteWord, f: QRanking) -> None:
    if (f.n, f.k) != w.shape:
        raise ValueError(f"ranking shape {(f.n, f.k)} does not match word shape {w.shape}")


def check_property_1(w: FiniteWord, f: QRanking, cap: Optional[int] = None) -> PropertyReport:
    """Every higher-ranked q reaches every lower-ranked q' through all of B(1..k)."""
    _shape_check(w, f)
    everything = frozenset(range(1, f.k + 1))
    witnesses = []
    for i in range(f.n):
        for j in range(f.n):
            if f.r[i] <= f.r[j]:
                continue
            found = None
            for path in enumerate_full_paths(w, q(i), q(j), cap):
                prof = PathVisitProfile.of(path)
                if prof.visited_B == everything:
                    found = prof
                    break
            if found is None:
                return PropertyReport(
                    "P1", False, tuple(witnesses),
                    {"from": f"q{i}", "to": f"q{j}", "missing": "full path visiting every B(i)"},
                )
            witnesses.append(found)
    return PropertyReport("P1", True, tuple(witnesses))


def _owed_index(prof: PathVisitProfile, perm: tuple[int, ...]) -> Optional[int]:
    """The position ``i`` (1-based) whose visit pattern the path matches, if any."""
    k = len(perm)
    for i in range(1, k + 1):
        if perm[i - 1] not in prof.visited_G:
            continue
        ok = all(perm[j - 1] not in prof.visited_B for j in range(1, i + 1))
        ok = ok and all(perm[j - 1] in prof.visited_B for j in range(i + 1, k + 1))
        ok = ok and all(perm[j - 1] not in prof.visited_G for j in range(1, i))
        if ok:
            return i
    return None


def check_property_2(w: FiniteWord, f: QRanking, cap: Optional[int] = None) -> PropertyReport:
    """Each q-track carries exactly k full paths, path i owing obligation h(q)[i]."""
    _shape_check(w, f)
    witnesses = []
    counts = {}
    for i in range(f.n):
        perm = f.h[i]
        paths = enumerate_full_paths(w, q(i), q(i), cap)
        counts[f"q{i}"] = len(paths)
        if len(paths) != f.k:
            return PropertyReport(
                "P2", False, tuple(witnesses),
                {"state": f"q{i}", "path_count": len(paths), "expected": f.k,
                 "paths": [p.format() for p in paths]},
                details={"path_counts": counts},
            )
        by_index: dict[int, PathVisitProfile] = {}
        for path in paths:
            prof = PathVisitProfile.of(path)
            idx = _owed_index(prof, perm)
            if idx is None or idx in by_index:
                return PropertyReport("P2", False, tuple(witnesses), prof,
                                      details={"path_counts": counts})
            by_index[idx] = prof
        witnesses.extend(by_index[x] for x in sorted(by_index))
    return PropertyReport("P2", True, tuple(witnesses), details={"path_counts": counts})


def check_property_3(w: FiniteWord) -> PropertyReport:
    """Only Q-vertices have out-edges at the first level and in-edges at the last."""
    if len(w) == 0:
        raise ValueError("property 3 is undefined on the empty word")
    bad_out = sorted({s for s, _ in w.letters[0].edges if s.role is not Role.Q})
    bad_in = sorted({d for _, d in w.letters[-1].edges if d.role is not Role.Q})
    if bad_out or bad_in:
        return PropertyReport(
            "P3", False, (),
            {"first_level_sources": [str(s) for s in bad_out],
             "last_level_targets": [str(s) for s in bad_in]},
        )
    return PropertyReport("P3", True)


def check_property_4(w: FiniteWord, f: QRanking, cap: Optional[int] = None) -> PropertyReport:
    """No full path climbs from a lower-ranked q to a higher-ranked q'."""
    _shape_check(w, f)
    for i in range(f.n):
        for j in range(f.n):
            if f.r[i] < f.r[j] and count_full_paths(w, q(i), q(j)):
                path = enumerate_full_paths(w, q(i), q(j), cap)[0]
                return PropertyReport("P4", False, (), PathVisitProfile.of(path))
    return PropertyReport("P4", True)


def verify_q_word(w: FiniteWord, f: Optional[QRanking] = None,
                  cap: Optional[int] = None) -> list[PropertyReport]:
    f = f if f is not None else w.ranking
    if f is None:
        raise ValueError("no ranking given and the word carries none")
    return [
        check_property_1(w, f, cap),
        check_property_2(w, f, cap),
        check_property_3(w),
        check_property_4(w, f, cap),
    ]
