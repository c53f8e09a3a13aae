"""
Entropy and step distance along the negation process
====================================================

RPS entropy jumps after the first negation and then oscillates into the
entropy of the uniform mass function. The distance between consecutive
steps decays geometrically with ratio 1 / (Delta - 2).
"""

from rpsneg import (
    Frame,
    build_trace,
    pm_from_labels,
    rd_matrix,
    enumerate_pes,
    theoretical_distance_series,
    uniform_entropy,
)

frame = Frame(["A", "B"])
pm0 = pm_from_labels(frame, {("A",): 0.1, ("B",): 0.7, ("A", "B"): 0.2})

# %%
# The similarity kernel behind the distance (rows/columns: (A), (B), (A B), (B A))
print(rd_matrix(enumerate_pes(frame)).entries.round(4))

# %%
trace = build_trace(pm0, 9)
theory = theoretical_distance_series(trace.step_distances[0], trace.delta, 9)
print("  i   entropy   d(PM_i, PM_i+1)   d0/3^i")
for i, h in enumerate(trace.entropies):
    d = f"{trace.step_distances[i]:.6f}" if i < 9 else "        "
    t = f"{theory[i]:.6f}" if i < 9 else ""
    print(f"{i:3d}   {h:.4f}    {d}          {t}")

print("limit entropy:", uniform_entropy(frame))
print("converged (sup-norm < 1e-4) at i =", trace.converged_at)
print("ratios:", [round(r, 9) for r in trace.distance_ratios()])
