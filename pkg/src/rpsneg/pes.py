"""Frames, permutation events and the permutation event space.

A permutation event is stored as a tuple of element indices into a
:class:`Frame`; ``(0, 1)`` and ``(1, 0)`` are different events. The empty
tuple is the empty event.

The event space is enumerated in canonical order: by length, then
lexicographically by index sequence, so the empty event has ordinal 0.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import CapacityError, CountOverflowError, DomainError, FrameMismatchError

#: Largest value an exact count may take (signed 64-bit).
MAX_COUNT = 2**63 - 1

#: Default cap on the frame size that may be enumerated; pes_cardinality(7) = 13700.
DEFAULT_MAX_FRAME_SIZE = 7

Event = tuple[int, ...]


def _checked(value: int, what: str) -> int:
    if value > MAX_COUNT:
        raise CountOverflowError(f"{what} = {value} exceeds the 64-bit count limit")
    return value


def perm_count(n: int, r: int) -> int:
    """Number of r-permutations of n elements, n!/(n-r)!."""
    if n < 0 or r < 0:
        raise DomainError(f"perm_count needs non-negative arguments, got n={n}, r={r}")
    if r > n:
        raise DomainError(f"perm_count needs r <= n, got n={n}, r={r}")
    return _checked(math.perm(n, r), f"P({n},{r})")


def pes_cardinality(n: int) -> int:
    """Size of the permutation event space of an n-element frame, empty event included."""
    if n < 1:
        raise DomainError(f"frame size must be >= 1, got {n}")
    return _checked(sum(math.perm(n, r) for r in range(n + 1)), f"Delta({n})")


def f_of(i: int) -> int:
    """F(i) = sum_k P(i, k), the entropy divisor base for events of length i."""
    if i < 0:
        raise DomainError(f"F(i) needs i >= 0, got {i}")
    return _checked(sum(math.perm(i, k) for k in range(i + 1)), f"F({i})")


@dataclass(frozen=True)
class Frame:
    """Ordered set of distinct element labels.

    The position of a label in ``elements`` is its index in every event
    built over this frame.
    """

    elements: tuple[str, ...]
    _position: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, elements: Iterable[str]):
        elements = tuple(str(e) for e in elements)
        if not elements:
            raise DomainError("a frame needs at least one element")
        if len(set(elements)) != len(elements):
            dupes = sorted({e for e in elements if elements.count(e) > 1})
            raise DomainError(f"frame labels must be distinct, repeated: {dupes}")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "_position", {e: k for k, e in enumerate(elements)})

    @property
    def n(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def index_of(self, label: str) -> int:
        try:
            return self._position[label]
        except KeyError:
            raise DomainError(f"label {label!r} is not in frame {list(self.elements)}") from None

    def event(self, labels: Sequence[str]) -> Event:
        """Build an event from an ordered sequence of labels."""
        return self.check_event(tuple(self.index_of(lab) for lab in labels))

    def labels(self, event: Event) -> tuple[str, ...]:
        return tuple(self.elements[k] for k in event)

    def check_event(self, event: Sequence[int]) -> Event:
        """Return ``event`` as a tuple after checking it is valid over this frame."""
        event = tuple(int(k) for k in event)
        if any(k < 0 or k >= self.n for k in event):
            raise FrameMismatchError(f"event {event} has indices outside frame of size {self.n}")
        if len(set(event)) != len(event):
            raise DomainError(f"event {event} repeats an element")
        return event

    def format_event(self, event: Event) -> str:
        """Textual form used in CSV headers, e.g. ``(g2 g1)``; the empty event is ``()``."""
        return "(" + " ".join(self.labels(event)) + ")"


class EventSpaceIndex:
    """Canonical bijection between the events of PES(frame) and ordinals 0..delta-1."""

    def __init__(self, frame: Frame, events: list[Event]):
        self.frame = frame
        self.events: tuple[Event, ...] = tuple(events)
        self._ordinal = {e: k for k, e in enumerate(self.events)}
        self.delta = len(self.events)

    def __len__(self) -> int:
        return self.delta

    def __repr__(self) -> str:
        return f"EventSpaceIndex(frame={list(self.frame.elements)}, delta={self.delta})"

    def ordinal_of(self, event: Event) -> int:
        try:
            return self._ordinal[tuple(event)]
        except KeyError:
            raise FrameMismatchError(f"event {event} is not in PES of this frame") from None

    def event_of(self, ordinal: int) -> Event:
        return self.events[ordinal]

    @property
    def nonempty_events(self) -> tuple[Event, ...]:
        """Events at ordinals 1..delta-1, i.e. the coordinates of a dense mass vector."""
        return self.events[1:]


def enumerate_pes(frame: Frame, max_frame_size: int = DEFAULT_MAX_FRAME_SIZE) -> EventSpaceIndex:
    """Enumerate every permutation event of ``frame`` in canonical order.

    Raises CapacityError when the frame is larger than ``max_frame_size``.
    """
    if frame.n > max_frame_size:
        raise CapacityError(
            f"frame of size {frame.n} has Delta = {pes_cardinality(frame.n)} events, "
            f"above the enumeration cap of frame size {max_frame_size} "
            f"(Delta = {pes_cardinality(max_frame_size)})"
        )
    return _enumerate(frame)


@lru_cache(maxsize=32)
def _enumerate(frame: Frame) -> EventSpaceIndex:
    # itertools.permutations over range(n) already yields lexicographic order
    events = [
        p for r in range(frame.n + 1) for p in itertools.permutations(range(frame.n), r)
    ]
    return EventSpaceIndex(frame, events)


def rank_in_event(event: Event, element: int) -> int:
    """1-based position of ``element`` in ``event``."""
    try:
        return event.index(element) + 1
    except ValueError:
        raise DomainError(f"element {element} does not occur in event {event}") from None


def jaccard(e1: Event, e2: Event) -> float:
    """|set(e1) & set(e2)| / |set(e1) | set(e2)|, ignoring order."""
    s1, s2 = set(e1), set(e2)
    union = len(s1 | s2)
    if union == 0:
        raise DomainError("jaccard is undefined for two empty events")
    return len(s1 & s2) / union
