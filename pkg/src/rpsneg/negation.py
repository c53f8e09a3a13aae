"""Negation operators.

``negate_pm`` spreads the complement 1 - PM(A) of every nonempty event
uniformly over the other Delta - 2 nonempty events:

    negPM(A) = (1 - PM(A)) / (Delta - 2)

Iterating it converges to the uniform PM 1/(Delta - 1) with error ratio
-1/(Delta - 2) per step. Yager's negation of a probability distribution and
Yin et al.'s negation of a BPA are provided as baselines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, FrameMismatchError
from .mass import (
    BasicProbabilityAssignment,
    PermutationMassFunction,
    ProbabilityDistribution,
    pm_from_dense,
)
from .pes import EventSpaceIndex, Frame, enumerate_pes, pes_cardinality


@dataclass(frozen=True)
class NegationParameters:
    delta: int
    normalizer: int

    @classmethod
    def for_frame(cls, frame: Frame) -> "NegationParameters":
        delta = pes_cardinality(frame.n)
        if delta < 4:
            raise DomainError("negation undefined on singleton frame (Delta - 2 = 0)")
        return cls(delta=delta, normalizer=delta - 2)

    @property
    def fixed_point(self) -> float:
        return 1.0 / (self.delta - 1)


def _resolve(pm: PermutationMassFunction, index: EventSpaceIndex | None):
    params = NegationParameters.for_frame(pm.frame)
    if index is None:
        index = enumerate_pes(pm.frame)
    elif index.frame != pm.frame:
        raise FrameMismatchError("event space index was built for a different frame")
    return params, index


def _negate_vector(vec: np.ndarray, normalizer: int) -> np.ndarray:
    return (1.0 - vec) / normalizer


def negate_pm(pm: PermutationMassFunction, index: EventSpaceIndex | None = None) -> PermutationMassFunction:
    """Negation of a permutation mass function.

    Every nonempty event of the event space receives mass, focal or not.
    Raises DomainError on a one-element frame.
    """
    params, index = _resolve(pm, index)
    return pm_from_dense(index, _negate_vector(pm.as_dense_vector(index), params.normalizer))


def iterate_negation(
    pm0: PermutationMassFunction, k: int, index: EventSpaceIndex | None = None
) -> list[PermutationMassFunction]:
    """[PM_0, PM_1, ..., PM_k] with PM_{i+1} = negate_pm(PM_i)."""
    if k < 0:
        raise DomainError(f"iteration count must be >= 0, got {k}")
    params, index = _resolve(pm0, index)
    series = [pm0]
    vec = pm0.as_dense_vector(index)
    for _ in range(k):
        vec = _negate_vector(vec, params.normalizer)
        series.append(pm_from_dense(index, vec))
    return series


def closed_form_iterate(
    pm0: PermutationMassFunction, i: int, index: EventSpaceIndex | None = None
) -> PermutationMassFunction:
    """PM_i from the general term (PM_0 - c) * (-1/(Delta-2))**i + c, c = 1/(Delta-1)."""
    if i < 0:
        raise DomainError(f"iteration index must be >= 0, got {i}")
    params, index = _resolve(pm0, index)
    if i == 0:
        return pm0
    c = params.fixed_point
    vec = (pm0.as_dense_vector(index) - c) * (-1.0 / params.normalizer) ** i + c
    return pm_from_dense(index, vec)


def fixed_point_mass(frame: Frame) -> float:
    """Limit 1/(Delta - 1) of every coordinate under iterated negation."""
    return NegationParameters.for_frame(frame).fixed_point


def _reassign(values: list[float]) -> list[float]:
    # equal inputs must map to themselves bit-exactly
    n = len(values)
    return [math.fsum(values[:k] + values[k + 1:]) / (n - 1) for k in range(n)]


def yager_negate(p: ProbabilityDistribution) -> ProbabilityDistribution:
    """Yager's maximum-entropy negation, p_i -> (1 - p_i)/(n - 1)."""
    if len(p) < 2:
        raise DomainError("Yager negation needs at least 2 outcomes")
    return ProbabilityDistribution(p.labels, _reassign(list(p.probs)))


def yin_negate(m: BasicProbabilityAssignment) -> BasicProbabilityAssignment:
    """Yin et al.'s BPA negation over the focal elements only.

    With n focal elements each gets (1 - m(A))/(n - 1); subsets outside the
    focal set stay at zero.
    """
    focal = m.focal_elements()
    n = len(focal)
    if n < 2:
        raise DomainError(f"Yin negation needs at least 2 focal elements, got {n}")
    negated = _reassign([v for _, v in focal])
    return BasicProbabilityAssignment(m.frame, [(s, v) for (s, _), v in zip(focal, negated)])
