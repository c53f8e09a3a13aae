"""Belief assignments: permutation mass functions, probability
distributions and basic probability assignments."""

from __future__ import annotations

import math
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import DomainError, FrameMismatchError, ValidationError
from .pes import Event, EventSpaceIndex, Frame, enumerate_pes

#: Absolute tolerance on the sum-to-one check.
SUM_TOL = 1e-9


def _check_mass(value: float, what: str) -> float:
    value = float(value)
    if not math.isfinite(value) or value < 0.0 or value > 1.0:
        raise ValidationError(f"mass of {what} is {value!r}, outside [0, 1]")
    return value


def _check_sum(total: float, what: str) -> None:
    if abs(total - 1.0) > SUM_TOL:
        raise ValidationError(f"masses of {what} sum to {total!r}, not 1 (tolerance {SUM_TOL})")


class PermutationMassFunction:
    """Mass assignment over the permutation event space of a frame.

    Only strictly positive masses are stored; the empty event never is.
    Instances are immutable. Build them with :func:`pm_from_assignments`,
    :func:`pm_from_dense` or :func:`uniform_pm`.
    """

    __slots__ = ("frame", "_masses")

    def __init__(self, frame: Frame, masses: Mapping[Event, float]):
        # unchecked; the public constructors validate
        self.frame = frame
        self._masses = MappingProxyType(dict(masses))

    @property
    def masses(self) -> Mapping[Event, float]:
        return self._masses

    def mass_of(self, event: Sequence[int]) -> float:
        """Stored mass of ``event``, 0.0 for events that carry no mass."""
        return self._masses.get(self.frame.check_event(event), 0.0)

    def focal_elements(self) -> list[tuple[Event, float]]:
        """Events with strictly positive mass, in canonical order."""
        return sorted(self._masses.items(), key=lambda item: (len(item[0]), item[0]))

    def as_dense_vector(self, index: EventSpaceIndex | None = None) -> np.ndarray:
        """Masses of the nonempty events in canonical order (length Delta - 1)."""
        index = self._index(index)
        vec = np.zeros(index.delta - 1)
        for event, mass in self._masses.items():
            vec[index.ordinal_of(event) - 1] = mass
        return vec

    def total(self) -> float:
        return math.fsum(self._masses.values())

    def _index(self, index: EventSpaceIndex | None) -> EventSpaceIndex:
        if index is None:
            return enumerate_pes(self.frame)
        if index.frame != self.frame:
            raise FrameMismatchError("event space index was built for a different frame")
        return index

    def __eq__(self, other):
        if not isinstance(other, PermutationMassFunction):
            return NotImplemented
        return self.frame == other.frame and dict(self._masses) == dict(other._masses)

    def __repr__(self) -> str:
        body = ", ".join(
            f"{self.frame.format_event(e)}: {m:.6g}" for e, m in self.focal_elements()
        )
        return f"PermutationMassFunction({{{body}}})"


def pm_from_assignments(
    frame: Frame,
    pairs: Iterable[tuple[Sequence[int], float]] | Mapping[Sequence[int], float],
    renormalize: bool = False,
) -> PermutationMassFunction:
    """Validated PM from ``(event, mass)`` pairs.

    Events are index tuples over ``frame``. Zero masses are dropped. A
    nonzero mass on the empty event, a duplicate event, a mass outside
    [0, 1] or a total different from 1 raises ValidationError. With
    ``renormalize`` the masses are divided by their total first.
    """
    if isinstance(pairs, Mapping):
        pairs = pairs.items()
    collected: dict[Event, float] = {}
    for event, mass in pairs:
        event = frame.check_event(event)
        label = frame.format_event(event)
        if event in collected:
            raise ValidationError(f"duplicate event {label}")
        mass = float(mass)
        if not math.isfinite(mass) or mass < 0.0:
            raise ValidationError(f"mass of {label} is {mass!r}, outside [0, 1]")
        if not event and mass != 0.0:
            raise ValidationError(f"the empty event must have zero mass, got {mass!r}")
        collected[event] = mass

    total = math.fsum(collected.values())
    if renormalize:
        if total <= 0.0:
            raise ValidationError("cannot renormalize: masses sum to 0")
        collected = {e: m / total for e, m in collected.items()}
        total = math.fsum(collected.values())
    for event, mass in collected.items():
        _check_mass(mass, frame.format_event(event))
    _check_sum(total, "permutation mass function")
    return PermutationMassFunction(frame, {e: m for e, m in collected.items() if m > 0.0 and e})


def pm_from_labels(
    frame: Frame, pairs: Mapping[Sequence[str], float] | Iterable[tuple[Sequence[str], float]], **kwargs
) -> PermutationMassFunction:
    """Like :func:`pm_from_assignments` but with events given as label sequences."""
    if isinstance(pairs, Mapping):
        pairs = pairs.items()
    return pm_from_assignments(frame, [(frame.event(ev), m) for ev, m in pairs], **kwargs)


def pm_from_dense(index: EventSpaceIndex, vector: Sequence[float]) -> PermutationMassFunction:
    """Inverse of :meth:`PermutationMassFunction.as_dense_vector`."""
    vector = np.asarray(vector, dtype=float)
    if vector.shape != (index.delta - 1,):
        raise DomainError(f"dense vector must have length {index.delta - 1}, got {vector.shape}")
    return pm_from_assignments(index.frame, zip(index.nonempty_events, vector.tolist()))


def uniform_pm(frame: Frame, index: EventSpaceIndex | None = None) -> PermutationMassFunction:
    """PM giving 1/(Delta - 1) to every nonempty event."""
    index = index if index is not None else enumerate_pes(frame)
    value = 1.0 / (index.delta - 1)
    return PermutationMassFunction(frame, {e: value for e in index.nonempty_events})


class ProbabilityDistribution:
    """Probability distribution over an ordered list of outcome labels."""

    __slots__ = ("labels", "probs")

    def __init__(self, labels: Sequence[str], probs: Sequence[float]):
        labels = tuple(str(lab) for lab in labels)
        if len(labels) != len(probs):
            raise ValidationError(f"{len(labels)} labels but {len(probs)} probabilities")
        if len(set(labels)) != len(labels):
            raise ValidationError("outcome labels must be distinct")
        if not labels:
            raise ValidationError("a distribution needs at least one outcome")
        self.labels = labels
        self.probs = tuple(_check_mass(p, lab) for lab, p in zip(labels, probs))
        _check_sum(math.fsum(self.probs), "probability distribution")

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other):
        if not isinstance(other, ProbabilityDistribution):
            return NotImplemented
        return self.labels == other.labels and self.probs == other.probs

    def __repr__(self) -> str:
        return "ProbabilityDistribution({%s})" % ", ".join(
            f"{lab}: {p:.6g}" for lab, p in zip(self.labels, self.probs)
        )


class BasicProbabilityAssignment:
    """Mass function over unordered subsets of a frame (evidence theory)."""

    __slots__ = ("frame", "_masses")

    def __init__(self, frame: Frame, masses: Mapping[Iterable[int], float] | Iterable[tuple[Iterable[int], float]]):
        if isinstance(masses, Mapping):
            masses = masses.items()
        collected: dict[frozenset, float] = {}
        for subset, mass in masses:
            indices = list(subset)
            key = frozenset(frame.check_event(sorted(set(indices))))
            if len(key) != len(indices):
                raise ValidationError(f"subset {indices} repeats an element")
            name = "{" + ",".join(frame.elements[k] for k in sorted(key)) + "}"
            if key in collected:
                raise ValidationError(f"duplicate subset {name}")
            mass = _check_mass(mass, name)
            if not key and mass != 0.0:
                raise ValidationError(f"the empty set must have zero mass, got {mass!r}")
            collected[key] = mass
        _check_sum(math.fsum(collected.values()), "basic probability assignment")
        self.frame = frame
        self._masses = MappingProxyType({k: m for k, m in collected.items() if m > 0.0})

    @property
    def masses(self) -> Mapping[frozenset, float]:
        return self._masses

    def mass_of(self, subset: Iterable[int]) -> float:
        return self._masses.get(frozenset(subset), 0.0)

    def focal_elements(self) -> list[tuple[frozenset, float]]:
        return sorted(self._masses.items(), key=lambda item: (len(item[0]), sorted(item[0])))

    def __eq__(self, other):
        if not isinstance(other, BasicProbabilityAssignment):
            return NotImplemented
        return self.frame == other.frame and dict(self._masses) == dict(other._masses)

    def __repr__(self) -> str:
        body = ", ".join(
            "{" + ",".join(self.frame.elements[k] for k in sorted(s)) + "}" + f": {m:.6g}"
            for s, m in self.focal_elements()
        )
        return f"BasicProbabilityAssignment({{{body}}})"
