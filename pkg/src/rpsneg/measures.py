"""Uncertainty and dissimilarity of permutation mass functions.

The RPS distance is the quadratic form

    d(PM1, PM2) = sqrt(0.5 * v @ RD @ v),   v = PM1 - PM2

over the nonempty events, where RD[r, s] = jaccard(A_r, A_s) * OD(A_r, A_s)
and OD is the ordered degree (rank disagreement kernel). The empty event is
left out of every vector and of RD; its coordinate is always 0.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import CapacityError, DomainError, FrameMismatchError, NumericalError
from .mass import PermutationMassFunction
from .negation import NegationParameters
from .pes import Event, EventSpaceIndex, Frame, enumerate_pes, f_of, jaccard, perm_count

#: Radicands in [-RADICAND_TOL, 0) are clamped to 0; anything below raises.
RADICAND_TOL = 1e-12

#: Largest RD matrix (entry count) rd_matrix will materialize; n = 6 gives ~3.8e6.
DEFAULT_MAX_RD_ENTRIES = 16_000_000


def ordered_degree(e1: Event, e2: Event) -> float:
    """exp(-sum of |rank differences| over shared elements / union size)."""
    union = len(set(e1) | set(e2))
    if union == 0:
        raise DomainError("ordered degree is undefined for two empty events")
    shared = set(e1) & set(e2)
    disagreement = sum(abs(e1.index(t) - e2.index(t)) for t in shared)
    return math.exp(-disagreement / union)


def rd_entry(e1: Event, e2: Event) -> float:
    return jaccard(e1, e2) * ordered_degree(e1, e2)


class RDMatrix:
    """Jaccard x ordered-degree similarity kernel over the nonempty events."""

    def __init__(self, index: EventSpaceIndex, entries: np.ndarray):
        self.index = index
        self.entries = entries
        self.entries.setflags(write=False)

    def __getitem__(self, key):
        return self.entries[key]

    def entry(self, e1: Event, e2: Event) -> float:
        return float(self.entries[self.index.ordinal_of(e1) - 1, self.index.ordinal_of(e2) - 1])

    @property
    def shape(self):
        return self.entries.shape


def rd_matrix(index: EventSpaceIndex, max_entries: int = DEFAULT_MAX_RD_ENTRIES) -> RDMatrix:
    """Materialize the RD kernel for every pair of nonempty events."""
    events = index.nonempty_events
    m = len(events)
    if m * m > max_entries:
        raise CapacityError(
            f"RD matrix for Delta = {index.delta} has {m * m} entries, above the cap of {max_entries}"
        )
    n = index.frame.n
    # rank[e, t] = 1-based position of element t in event e, 0 when absent
    rank = np.zeros((m, n))
    for row, event in enumerate(events):
        for pos, t in enumerate(event):
            rank[row, t] = pos + 1
    present = (rank > 0).astype(float)
    inter = present @ present.T
    sizes = present.sum(axis=1)
    union = sizes[:, None] + sizes[None, :] - inter
    disagreement = np.zeros((m, m))
    for t in range(n):
        both = present[:, t, None] * present[None, :, t]
        disagreement += both * np.abs(rank[:, t, None] - rank[None, :, t])
    entries = (inter / union) * np.exp(-disagreement / union)
    return RDMatrix(index, entries)


def _same_frame(pm1: PermutationMassFunction, pm2: PermutationMassFunction) -> Frame:
    if pm1.frame != pm2.frame:
        raise FrameMismatchError("distance needs two mass functions over the same frame")
    return pm1.frame


def _root(radicand: float) -> float:
    if radicand < -RADICAND_TOL:
        raise NumericalError(
            f"negative radicand {radicand!r} in RPS distance; RD is not positive "
            "semidefinite on this input"
        )
    return math.sqrt(max(radicand, 0.0))


def rps_distance(
    pm1: PermutationMassFunction,
    pm2: PermutationMassFunction,
    rd: RDMatrix | None = None,
) -> float:
    """RPS distance through the materialized RD matrix."""
    frame = _same_frame(pm1, pm2)
    if rd is None:
        rd = rd_matrix(enumerate_pes(frame))
    elif rd.index.frame != frame:
        raise FrameMismatchError("RD matrix was built for a different frame")
    v = pm1.as_dense_vector(rd.index) - pm2.as_dense_vector(rd.index)
    return _root(0.5 * float(v @ rd.entries @ v))


def rps_distance_matrix_free(pm1: PermutationMassFunction, pm2: PermutationMassFunction) -> float:
    """RPS distance by direct double summation over the events where the two PMs differ.

    Never builds RD, so it also works on frames whose kernel would not fit
    in memory, provided the PMs are sparse.
    """
    _same_frame(pm1, pm2)
    diff = {}
    for event in set(pm1.masses) | set(pm2.masses):
        d = pm1.masses.get(event, 0.0) - pm2.masses.get(event, 0.0)
        if d != 0.0:
            diff[event] = d
    items = sorted(diff.items(), key=lambda item: (len(item[0]), item[0]))
    total = 0.0
    for a, da in items:
        for b, db in items:
            total += da * db * rd_entry(a, b)
    return _root(0.5 * total)


def rps_entropy(pm: PermutationMassFunction) -> float:
    """RPS entropy in bits, -sum PM(A) log2(PM(A) / (F(|A|) - 1)) over focal events."""
    terms = [m * math.log2(m / (f_of(len(event)) - 1)) for event, m in pm.focal_elements()]
    return -math.fsum(terms)


def uniform_entropy(frame: Frame) -> float:
    """RPS entropy of the uniform PM, the limit of the iterated-negation entropy series."""
    params = NegationParameters.for_frame(frame)
    nonempty = params.delta - 1
    return math.fsum(
        perm_count(frame.n, r) / nonempty * math.log2(nonempty * (f_of(r) - 1))
        for r in range(1, frame.n + 1)
    )
