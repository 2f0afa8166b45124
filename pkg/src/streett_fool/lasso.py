"""Streett and Rabin acceptance of ultimately periodic words, with witnesses.

The product of the automaton with a lasso ``u . v^omega`` has one vertex
per (state, position), positions running over ``u`` then ``v`` with the
last period position wrapping back to ``|u|``. A lasso is accepted iff a
reachable cycle of the product projects to a state set satisfying the
acceptance condition.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import FullStreettAutomaton, LassoWord, RunPath, ShapeMismatch, StateId
from .scc import is_nontrivial, strongly_connected_components


def streett_holds(inf: frozenset, pairs) -> bool:
    return all(not (inf & good) or bool(inf & bad) for good, bad in pairs)


def rabin_holds(inf: frozenset, pairs) -> bool:
    return any(bool(inf & good) and not (inf & bad) for good, bad in pairs)


@dataclass(frozen=True)
class ProductGraph:
    states: tuple[StateId, ...]
    num_positions: int
    prefix_length: int
    succ: tuple[tuple[int, ...], ...]
    initial: tuple[int, ...]
    reachable: frozenset

    @property
    def num_vertices(self) -> int:
        return len(self.succ)

    def vertex(self, v: int) -> tuple[StateId, int]:
        return self.states[v % len(self.states)], v // len(self.states)

    def state_index(self, v: int) -> int:
        return v % len(self.states)


def build_product(aut: FullStreettAutomaton, lasso: LassoWord) -> ProductGraph:
    if lasso.shape != aut.shape:
        raise ShapeMismatch(f"lasso shape {lasso.shape} does not match automaton {aut.shape}")
    states = aut.states
    idx = {s: i for i, s in enumerate(states)}
    ns = len(states)
    u, v = len(lasso.prefix), len(lasso.period)
    positions = u + v
    succ: list[list[int]] = [[] for _ in range(ns * positions)]
    for pos in range(positions):
        letter = lasso.prefix.letters[pos] if pos < u else lasso.period.letters[pos - u]
        nxt = pos + 1 if pos + 1 < positions else u
        for s, d in letter.edges:
            succ[pos * ns + idx[s]].append(nxt * ns + idx[d])
    frozen = tuple(tuple(sorted(out)) for out in succ)
    initial = tuple(sorted(idx[s] for s in aut.initial))
    seen = set(initial)
    queue = deque(initial)
    while queue:
        x = queue.popleft()
        for y in frozen[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return ProductGraph(states, positions, u, frozen, initial, frozenset(seen))


@dataclass(frozen=True)
class LassoWitness:
    stem: RunPath
    loop: RunPath
    inf_states: frozenset

    def to_dict(self) -> dict:
        return {
            "stem": self.stem.format(),
            "loop": self.loop.format(),
            "inf_states": sorted(str(s) for s in self.inf_states),
        }


@dataclass(frozen=True)
class AcceptanceVerdict:
    accepted: bool
    condition: str
    witness: Optional[LassoWitness] = None

    def __post_init__(self):
        if self.accepted and self.witness is None:
            raise ValueError("an accepting verdict needs a witness")

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "accepted": self.accepted,
            "witness": self.witness.to_dict() if self.witness else None,
        }


def _pair_indices(aut: FullStreettAutomaton, states: Sequence[StateId]) -> list[tuple[frozenset, frozenset]]:
    idx = {s: i for i, s in enumerate(states)}
    return [(frozenset(idx[s] for s in good), frozenset(idx[s] for s in bad)) for good, bad in aut.pairs]


def _bfs(succ, sources: Sequence[int], goals: set, allowed: Optional[set] = None) -> list[int]:
    """Shortest path from any source to any goal, restricted to ``allowed`` if given."""
    parent = {s: None for s in sources}
    queue = deque(sources)
    while queue:
        x = queue.popleft()
        if x in goals:
            path = [x]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path[::-1]
        for y in succ[x]:
            if y not in parent and (allowed is None or y in allowed):
                parent[y] = x
                queue.append(y)
    raise RuntimeError("no path; product graph invariant broken")


def _cycle_through(succ, anchor: int, targets: list[int], comp: set) -> list[int]:
    """Closed walk inside ``comp`` from ``anchor`` visiting each target, back to ``anchor``."""
    walk = [anchor]
    for t in targets + [anchor]:
        if walk[-1] == t and len(walk) > 1:
            continue
        if walk[-1] == t:
            # need at least one step: leave through a successor inside comp
            step = next(y for y in succ[t] if y in comp)
            walk.extend(_bfs(succ, [step], {t}, comp))
        else:
            walk.extend(_bfs(succ, [walk[-1]], {t}, comp)[1:])
    return walk


def _witness(graph: ProductGraph, stem: list[int], loop: list[int]) -> LassoWitness:
    stem_states = tuple(graph.states[graph.state_index(v)] for v in stem)
    loop_states = tuple(graph.states[graph.state_index(v)] for v in loop)
    return LassoWitness(
        RunPath(stem_states, 0),
        RunPath(loop_states, len(stem) - 1),
        frozenset(loop_states),
    )


def find_streett_component(graph: ProductGraph, pairs_idx) -> Optional[list[int]]:
    """Recursive SCC refinement: a reachable cyclic vertex set satisfying Streett, or None.

    Inside an SCC, an index with G present but B absent can only be
    satisfied by avoiding G altogether, so its G-vertices are deleted and
    the remainder is decomposed again.
    """
    ns = len(graph.states)
    work = [sorted(graph.reachable)]
    while work:
        region = work.pop()
        for comp in strongly_connected_components(graph.succ, region):
            if not is_nontrivial(comp, graph.succ):
                continue
            present = {v % ns for v in comp}
            bad = [i for i, (good, bd) in enumerate(pairs_idx) if present & good and not present & bd]
            if not bad:
                return comp
            drop = set().union(*(pairs_idx[i][0] for i in bad))
            rest = [v for v in comp if v % ns not in drop]
            if rest:
                work.append(rest)
    return None


def streett_accepts(aut: FullStreettAutomaton, lasso: LassoWord) -> AcceptanceVerdict:
    graph = build_product(aut, lasso)
    pairs_idx = _pair_indices(aut, graph.states)
    comp = find_streett_component(graph, pairs_idx)
    if comp is None:
        return AcceptanceVerdict(False, "streett")
    ns = len(graph.states)
    comp_set = set(comp)
    stem = _bfs(graph.succ, list(graph.initial), comp_set)
    anchor = stem[-1]
    present = {v % ns for v in comp}
    targets = []
    for _, bad in pairs_idx:
        if present & bad:
            targets.append(min(v for v in comp if v % ns in bad))
    loop = _cycle_through(graph.succ, anchor, targets, comp_set)
    return AcceptanceVerdict(True, "streett", _witness(graph, stem, loop))


def rabin_accepts(aut: FullStreettAutomaton, lasso: LassoWord) -> AcceptanceVerdict:
    graph = build_product(aut, lasso)
    pairs_idx = _pair_indices(aut, graph.states)
    ns = len(graph.states)
    for good, bad in pairs_idx:
        if not good:
            continue
        region = [v for v in sorted(graph.reachable) if v % ns not in bad]
        for comp in strongly_connected_components(graph.succ, region):
            if not is_nontrivial(comp, graph.succ):
                continue
            hits = [v for v in comp if v % ns in good]
            if not hits:
                continue
            comp_set = set(comp)
            stem = _bfs(graph.succ, list(graph.initial), {hits[0]})
            loop = _cycle_through(graph.succ, hits[0], [], comp_set)
            return AcceptanceVerdict(True, "rabin", _witness(graph, stem, loop))
    return AcceptanceVerdict(False, "rabin")


def check_witness(aut: FullStreettAutomaton, lasso: LassoWord, verdict: AcceptanceVerdict) -> bool:
    """Replay an accepting witness edge by edge and re-test its condition."""
    wit = verdict.witness
    if wit is None:
        return False
    stem, loop = wit.stem, wit.loop
    if stem.start_level != 0 or stem.states[0] not in aut.initial:
        return False
    if not stem.is_run_of(lasso.letter_at) or not loop.is_run_of(lasso.letter_at):
        return False
    steps = len(loop.states) - 1
    if loop.start_level != stem.end_level or loop.states[0] != stem.states[-1]:
        return False
    if steps < 1 or loop.states[-1] != loop.states[0]:
        return False
    if loop.start_level < len(lasso.prefix) or steps % len(lasso.period):
        return False
    if wit.inf_states != frozenset(loop.states):
        return False
    holds = streett_holds if verdict.condition == "streett" else rabin_holds
    return holds(wit.inf_states, aut.pairs)
