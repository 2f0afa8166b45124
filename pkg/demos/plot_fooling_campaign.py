"""
A fooling-set campaign at (3, 2)
================================

Every ranking gives a word whose periodic repetition the automaton
rejects, while gluing words of two different rankings yields an
accepted lasso. The campaign checks both facts and turns the number
of rankings into a state lower bound.
"""

from streett_fool import CampaignConfig, run_campaign

# all 48 rankings, every ordered pair once, period G_f . G_f'
report = run_campaign(CampaignConfig(3, 2, repetition_exponents=((1, 1),)))
summary = report.to_dict()["summary"]
for section, tally in summary.items():
    print(f"{section:10s} {tally['passed']}/{tally['total']}")
print(report.timing)
print(report.statement())

# longer repetitions on a seeded sample of pairs
sampled = run_campaign(CampaignConfig(
    3, 2, pair_policy="sample", sample_count=25, seed=1,
    repetition_exponents=((1, 2), (2, 1), (2, 2)),
))
print("sampled mixed:", sampled.to_dict()["summary"]["mixed"])
