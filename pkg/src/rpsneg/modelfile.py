"""JSON model files.

A model file is a UTF-8 JSON object with exactly three fields::

    {
      "kind": "pm",
      "frame": ["g1", "g2"],
      "masses": [
        {"event": ["g1"], "mass": 0.1},
        {"event": ["g2", "g1"], "mass": 0.9}
      ]
    }

``kind`` is ``pm`` (events are ordered label arrays), ``bpa`` (events are
subsets; order ignored) or ``probability`` (each event names exactly one
outcome).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from .errors import RPSError, ValidationError
from .mass import (
    BasicProbabilityAssignment,
    PermutationMassFunction,
    ProbabilityDistribution,
    pm_from_assignments,
)
from .pes import Frame

KINDS = ("pm", "bpa", "probability")
_TOP_FIELDS = {"kind", "frame", "masses"}
_ENTRY_FIELDS = {"event", "mass"}


class ModelFileError(RPSError):
    """The model file is not well-formed JSON or does not follow the schema."""


@dataclass(frozen=True)
class ModelFile:
    kind: str
    frame: Frame
    masses: tuple[tuple[tuple[str, ...], float], ...]
    source: str = "<model>"

    def _indexed(self):
        return [(self.frame.event(labels), mass) for labels, mass in self.masses]

    def to_pm(self, renormalize: bool = False) -> PermutationMassFunction:
        self._require("pm")
        return pm_from_assignments(self.frame, self._indexed(), renormalize=renormalize)

    def to_bpa(self, renormalize: bool = False) -> BasicProbabilityAssignment:
        self._require("bpa")
        pairs = self._indexed()
        if renormalize:
            pairs = _rescale(pairs)
        return BasicProbabilityAssignment(self.frame, pairs)

    def to_probability(self, renormalize: bool = False) -> ProbabilityDistribution:
        self._require("probability")
        probs = [0.0] * self.frame.n
        seen = set()
        for k, (labels, mass) in enumerate(self.masses):
            if len(labels) != 1:
                raise ModelFileError(
                    f"{self.source}: masses[{k}].event must name exactly one outcome for kind 'probability'"
                )
            if labels[0] in seen:
                raise ValidationError(f"duplicate outcome {labels[0]!r}")
            seen.add(labels[0])
            probs[self.frame.index_of(labels[0])] = mass
        if renormalize:
            total = math.fsum(probs)
            if total > 0:
                probs = [p / total for p in probs]
        return ProbabilityDistribution(self.frame.elements, probs)

    def _require(self, kind: str) -> None:
        if self.kind != kind:
            raise ModelFileError(f"{self.source}: model kind is {self.kind!r}, expected {kind!r}")


def _rescale(pairs):
    total = math.fsum(m for _, m in pairs)
    if total <= 0:
        return pairs
    return [(e, m / total) for e, m in pairs]


def parse_model(text: str, source: str = "<model>") -> ModelFile:
    """Parse and schema-check a model file. Mass-function invariants are checked later."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFileError(f"{source}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from None

    def fail(where: str, msg: str):
        raise ModelFileError(f"{source}: {where}: {msg}")

    if not isinstance(data, dict):
        fail("top level", "expected a JSON object")
    unknown = sorted(set(data) - _TOP_FIELDS)
    if unknown:
        fail("top level", f"unknown field(s) {unknown}")
    missing = sorted(_TOP_FIELDS - set(data))
    if missing:
        fail("top level", f"missing field(s) {missing}")

    kind = data["kind"]
    if kind not in KINDS:
        fail("kind", f"must be one of {list(KINDS)}, got {kind!r}")

    labels = data["frame"]
    if not isinstance(labels, list) or not labels or not all(isinstance(x, str) for x in labels):
        fail("frame", "must be a non-empty array of strings")
    if len(set(labels)) != len(labels):
        fail("frame", "labels must be distinct")
    frame = Frame(labels)

    entries = data["masses"]
    if not isinstance(entries, list):
        fail("masses", "must be an array")
    masses = []
    for k, entry in enumerate(entries):
        where = f"masses[{k}]"
        if not isinstance(entry, dict):
            fail(where, "expected an object with 'event' and 'mass'")
        unknown = sorted(set(entry) - _ENTRY_FIELDS)
        if unknown:
            fail(where, f"unknown field(s) {unknown}")
        missing = sorted(_ENTRY_FIELDS - set(entry))
        if missing:
            fail(where, f"missing field(s) {missing}")
        event, mass = entry["event"], entry["mass"]
        if not isinstance(event, list) or not all(isinstance(x, str) for x in event):
            fail(f"{where}.event", "must be an array of frame labels")
        strangers = [x for x in event if x not in frame.elements]
        if strangers:
            fail(f"{where}.event", f"label(s) {strangers} not in frame")
        if len(set(event)) != len(event):
            fail(f"{where}.event", "repeats a label")
        if isinstance(mass, bool) or not isinstance(mass, (int, float)):
            fail(f"{where}.mass", f"must be a number, got {mass!r}")
        masses.append((tuple(event), float(mass)))
    return ModelFile(kind=kind, frame=frame, masses=tuple(masses), source=source)


def load_model(path: str | Path) -> ModelFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ModelFileError(f"{path}: cannot read model file: {exc}") from None
    return parse_model(text, source=str(path))


def pm_to_model(pm: PermutationMassFunction) -> dict:
    """Model-file dict for ``pm`` (focal elements only, full precision)."""
    return {
        "kind": "pm",
        "frame": list(pm.frame.elements),
        "masses": [
            {"event": list(pm.frame.labels(e)), "mass": m} for e, m in pm.focal_elements()
        ],
    }


def bpa_to_model(m: BasicProbabilityAssignment) -> dict:
    return {
        "kind": "bpa",
        "frame": list(m.frame.elements),
        "masses": [
            {"event": [m.frame.elements[k] for k in sorted(s)], "mass": v}
            for s, v in m.focal_elements()
        ],
    }


def probability_to_model(p: ProbabilityDistribution) -> dict:
    return {
        "kind": "probability",
        "frame": list(p.labels),
        "masses": [{"event": [lab], "mass": v} for lab, v in zip(p.labels, p.probs)],
    }
