"""
Iterated negation converges to the uniform mass function
========================================================

Each negation sends PM(A) to (1 - PM(A)) / (Delta - 2). Repeating it drives
every event towards 1 / (Delta - 1), with the error shrinking by a factor
Delta - 2 and flipping sign at every step.
"""

import numpy as np

from rpsneg import Frame, closed_form_iterate, fixed_point_mass, iterate_negation, pm_from_labels

frame = Frame(["A", "B"])
pm0 = pm_from_labels(frame, {("A",): 0.1, ("B",): 0.7, ("A", "B"): 0.2})

# %%
series = iterate_negation(pm0, 9)
print("  i    (A)     (B)    (A B)   (B A)")
for i, pm in enumerate(series):
    print(f"{i:3d}  " + "  ".join(f"{x:.4f}" for x in pm.as_dense_vector()))

# %%
# The closed form gives the same PM_i without iterating
for i in (2, 5, 9):
    gap = np.abs(closed_form_iterate(pm0, i).as_dense_vector() - series[i].as_dense_vector()).max()
    print(f"i={i}: closed form vs iteration, max gap {gap:.1e}")

print("fixed point:", fixed_point_mass(frame))

# %%
# Negating twice does not give back the original
print("PM_0:", pm0.as_dense_vector())
print("PM_2:", series[2].as_dense_vector().round(4))
