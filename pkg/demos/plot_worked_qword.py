"""
Building and checking one Q-word
================================

A full Streett automaton with three Q states and two acceptance pairs,
one hand-picked ranking, and the four path properties checked on the
resulting run graph.
"""

from streett_fool import build_full_streett, build_q_word, verify_q_word
from streett_fool.builder import h_word_templates, r_word_templates
from streett_fool.rankings import parse_ranking

aut = build_full_streett(3, 2)
print("states:", " ".join(str(s) for s in aut.states))

# q2 ranks highest, then q0, then q1; q2 discharges pair 2 before pair 1
f = parse_ranking("r=[2,1,3];h=[[1,2],[1,2],[2,1]]")

# the R-word walks down the ranking, passing every B(i) between two q's
print("R-word:", " ".join(str(t) for t in r_word_templates(aut, f.r)))
print("H-word:", " ".join(str(t) for t in h_word_templates(aut, f.h)))

w = build_q_word(aut, f)
print("letters:", len(w))

for rep in verify_q_word(w, f):
    print(rep.property, "holds" if rep.holds else "fails")
    for wit in rep.witnesses[:2]:
        print("   ", " ".join(wit.path.format()))
