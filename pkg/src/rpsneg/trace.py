"""Iterated-negation experiments: PM series with per-step entropy and distance."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError
from .mass import PermutationMassFunction
from .measures import RDMatrix, rd_matrix, rps_distance, rps_entropy
from .negation import NegationParameters, iterate_negation
from .pes import EventSpaceIndex, enumerate_pes

DEFAULT_ITERATIONS = 9
DEFAULT_EPS = 1e-4


@dataclass(frozen=True)
class NegationTrace:
    pms: tuple[PermutationMassFunction, ...]
    entropies: tuple[float, ...]
    step_distances: tuple[float, ...]
    converged_at: int | None
    fixed_point: float
    delta: int
    index: EventSpaceIndex

    @property
    def iterations(self) -> int:
        return len(self.pms) - 1

    def mass_table(self) -> np.ndarray:
        """(k+1) x (Delta-1) array, row i holding PM_i in canonical event order."""
        return np.vstack([pm.as_dense_vector(self.index) for pm in self.pms])

    def distance_ratios(self) -> list[float]:
        """d_i / d_{i+1} for consecutive step distances; nan where d_{i+1} is 0."""
        d = self.step_distances
        return [d[i] / d[i + 1] if d[i + 1] > 0 else math.nan for i in range(len(d) - 1)]


def detect_convergence(trace: NegationTrace, eps: float = DEFAULT_EPS) -> int | None:
    """First i with max_A |PM_i(A) - 1/(Delta-1)| < eps, or None."""
    if eps <= 0:
        raise DomainError(f"eps must be positive, got {eps}")
    deviation = np.max(np.abs(trace.mass_table() - trace.fixed_point), axis=1)
    below = np.flatnonzero(deviation < eps)
    return int(below[0]) if below.size else None


def build_trace(
    pm0: PermutationMassFunction,
    k: int = DEFAULT_ITERATIONS,
    eps: float = DEFAULT_EPS,
    index: EventSpaceIndex | None = None,
    rd: RDMatrix | None = None,
) -> NegationTrace:
    """Negate ``pm0`` k times and measure entropy and consecutive distance at every step."""
    if k < 1:
        raise DomainError(f"a trace needs k >= 1 iterations, got {k}")
    params = NegationParameters.for_frame(pm0.frame)
    if index is None:
        index = enumerate_pes(pm0.frame)
    if rd is None:
        rd = rd_matrix(index)
    pms = iterate_negation(pm0, k, index)
    trace = NegationTrace(
        pms=tuple(pms),
        entropies=tuple(rps_entropy(pm) for pm in pms),
        step_distances=tuple(rps_distance(a, b, rd) for a, b in zip(pms, pms[1:])),
        converged_at=None,
        fixed_point=params.fixed_point,
        delta=params.delta,
        index=index,
    )
    return replace(trace, converged_at=detect_convergence(trace, eps))


def theoretical_distance_series(d0: float, delta: int, k: int) -> list[float]:
    """[d0 / (Delta-2)**i for i in range(k)]."""
    if delta < 4:
        raise DomainError(f"distance decay needs Delta >= 4, got {delta}")
    if d0 < 0:
        raise DomainError(f"d0 must be non-negative, got {d0}")
    return [d0 / (delta - 2) ** i for i in range(k)]


def predicted_convergence(
    pm0: PermutationMassFunction, eps: float = DEFAULT_EPS, index: EventSpaceIndex | None = None
) -> int:
    """Closed-form first i with max|h_0| / (Delta-2)**i < eps, h_0 = PM_0 - 1/(Delta-1)."""
    params = NegationParameters.for_frame(pm0.frame)
    h0 = float(np.max(np.abs(pm0.as_dense_vector(index) - params.fixed_point)))
    if h0 < eps:
        return 0
    i = max(0, math.floor(math.log(h0 / eps, params.normalizer)))
    while h0 / params.normalizer**i >= eps:
        i += 1
    return i
