"""Graphviz export of a run graph: levels as columns, states as rows."""

from __future__ import annotations

from .core import FiniteWord, Role, StateId, states_of


def row_order(n: int, k: int) -> list[StateId]:
    """Top-to-bottom rows: g_k..g_1, b_k..b_1, q_0..q_(n-1), t."""
    states = states_of(n, k)
    gs = sorted((s for s in states if s.role is Role.G), reverse=True)
    bs = sorted((s for s in states if s.role is Role.B), reverse=True)
    qs = [s for s in states if s.role is Role.Q]
    ts = [s for s in states if s.role is Role.T]
    return gs + bs + qs + ts


def vertex_name(s: StateId, level: int) -> str:
    return f"{s}_{level}"


def to_dot(w: FiniteWord, name: str = "qword") -> str:
    rows = row_order(w.n, w.k)
    lines = [
        f"digraph {name} {{",
        "  rankdir=LR;",
        "  nodesep=0.15;",
        "  node [shape=circle, width=0.12, fixedsize=true, label=\"\"];",
    ]
    for level in range(w.num_levels):
        lines.append(f"  subgraph level_{level} {{")
        lines.append("    rank=same;")
        for s in rows:
            attrs = f' [xlabel="{s}"]' if level == 0 else ""
            lines.append(f"    {vertex_name(s, level)}{attrs};")
        chain = " -> ".join(vertex_name(s, level) for s in rows)
        lines.append(f"    {chain} [style=invis];")
        lines.append("  }")
    # invisible row spines keep each state on one horizontal line
    for s in rows:
        if w.num_levels > 1:
            spine = " -> ".join(vertex_name(s, lv) for lv in range(w.num_levels))
            lines.append(f"  {spine} [style=invis, weight=10];")
    for level, letter in enumerate(w.letters):
        for src, dst in letter.edges:
            lines.append(f"  {vertex_name(src, level)} -> {vertex_name(dst, level + 1)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(w: FiniteWord, path, name: str = "qword") -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_dot(w, name))
