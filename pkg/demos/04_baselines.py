"""
Negation in probability theory and evidence theory
==================================================

Yager's negation acts on a probability distribution, Yin et al.'s on the
focal elements of a BPA. Both spread 1 - m over n - 1 slots; the permutation
negation instead spreads over every nonempty event, focal or not.
"""

from rpsneg import (
    BasicProbabilityAssignment,
    Frame,
    ProbabilityDistribution,
    negate_pm,
    pm_from_labels,
    yager_negate,
    yin_negate,
)

p = ProbabilityDistribution(["A", "B", "C"], [0.6, 0.3, 0.1])
print(p, "->", yager_negate(p))

# %%
frame = Frame(["A", "B"])
m = BasicProbabilityAssignment(frame, {(0,): 0.3, (0, 1): 0.7})
print(m, "->", yin_negate(m))

# %%
# Same beliefs as a permutation mass function: (B) and (B A) now receive mass too
pm = pm_from_labels(frame, {("A",): 0.3, ("A", "B"): 0.7})
print(pm, "->", negate_pm(pm))
