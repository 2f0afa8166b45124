"""
Lower-bound arithmetic
======================

How many rankings an automaton of a given size embeds, and how fast
that number grows.
"""

from streett_fool.rankings import count_q_rankings, lower_bound_report

for n, k in [(3, 2), (4, 3), (6, 6)]:
    print(f"(n={n}, k={k}): {count_q_rankings(n, k)} rankings")

# an automaton with n states and k pairs hosts a smaller full one
for n, k in [(9, 2), (20, 3), (40, 200)]:
    rep = lower_bound_report(n, k)
    print(f"n={n:3d} k={k:3d} -> k0={rep.k0:2d} n0={rep.n0:2d} "
          f"log2(states) >= {rep.log2_count:8.2f}  [{rep.regime}]")
