"""
Permutation event spaces and mass functions
===========================================

A frame of n labels induces an event space of every ordered arrangement of
every subset. Order matters: (A, B) and (B, A) are different events.
"""

from rpsneg import Frame, enumerate_pes, f_of, pes_cardinality, pm_from_labels

# %%
# Size of the event space, empty event included
for n in range(1, 8):
    print(f"n={n}: Delta={pes_cardinality(n):>6}   F({n})={f_of(n)}")

# %%
# Canonical order: by length, then lexicographically by index
frame = Frame(["A", "B", "C"])
index = enumerate_pes(frame)
print([frame.format_event(e) for e in index.events])

# %%
# A mass function lives on the nonempty events. Unmentioned events carry 0.
pm = pm_from_labels(Frame(["A", "B"]), {("A",): 0.1, ("B",): 0.7, ("A", "B"): 0.2})
print(pm)
print("PM(B, A) =", pm.mass_of((1, 0)))
print("dense vector:", pm.as_dense_vector())
