"""
Drawing a run graph
===================

Writes the run graph of one Q-word as Graphviz source, one column per
level and one row per state. Render with ``dot -Tsvg``.
"""

import sys

from streett_fool import build_full_streett, build_q_word
from streett_fool.dot import to_dot
from streett_fool.rankings import parse_ranking

f = parse_ranking("r=[2,1];h=[[1,2],[2,1]]")
w = build_q_word(build_full_streett(2, 2), f)
out = sys.argv[1] if len(sys.argv) > 1 else "qword_2_2.dot"
with open(out, "w") as fh:
    fh.write(to_dot(w))
print(f"wrote {out}: {w.num_levels} levels, {w.num_edges()} edges")
