"""Iterative Tarjan SCC decomposition over integer vertices."""

from __future__ import annotations

from typing import Iterable, Sequence


def strongly_connected_components(
    succ: Sequence[Sequence[int]], vertices: Iterable[int]
) -> list[list[int]]:
    """SCCs of the subgraph induced by ``vertices``.

    ``succ[v]`` lists successors of ``v`` in the full graph; edges leaving
    ``vertices`` are ignored. Components come out in reverse topological
    order, each sorted, and the result is deterministic for a given input.
    """
    allowed = set(vertices)
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    out: list[list[int]] = []
    counter = 0

    for root in sorted(allowed):
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(succ[root]))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in allowed:
                    continue
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if w in on_stack and index[w] < low[v]:
                    low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comp.sort()
                out.append(comp)
    return out


def is_nontrivial(comp: Sequence[int], succ: Sequence[Sequence[int]]) -> bool:
    """True if the component contains a cycle (more than one vertex, or a self-loop)."""
    if len(comp) > 1:
        return True
    v = comp[0]
    return v in succ[v]
