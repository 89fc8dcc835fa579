"""Model documents: JSON serialization of spaces, valuations, and measures.

Document shape::

    {
      "states": ["H-acc", "H-sh", ...],
      "atoms": {
        "h":    {"*": ["H-acc", "H-sh", "H-st"]},
        "pbar": {"H-acc": ["H-acc", "H-sh"], ...one entry per state...}
      },
      "measures": {
        "pi": {"H-acc": "3/10", ...one entry per state...}
      }
    }

State order in ``states`` is canonical.  An atom maps every state to an
interpretation list, or uses the single key ``"*"`` as constant shorthand.
Weights are rational strings ``"a/b"`` or ``"n"``; floats are rejected so
no value is ever silently corrupted.  A valuation omitting a state is
rejected rather than defaulted.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import ModelError
from .model import Model, StateSpace, VariableValuation
from .belief import ProbabilityMeasure

__all__ = ["ModelDocument", "parse_document", "load_document"]

_RATIONAL = re.compile(r"-?\d+(/\d+)?\Z")


@dataclass(frozen=True)
class ModelDocument:
    """A parsed model file: the model plus its named measures."""

    model: Model
    measures: dict[str, ProbabilityMeasure]

    def measure(self, name: str) -> ProbabilityMeasure:
        try:
            return self.measures[name]
        except KeyError:
            raise ModelError(f"unknown measure: {name!r}") from None


def _parse_rational(text: object, context: str) -> Fraction:
    if not isinstance(text, str) or _RATIONAL.match(text) is None:
        raise ModelError(f"{context}: expected a rational string like '3/10' or '1', got {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ModelError(f"{context}: zero denominator in {text!r}") from None


def _parse_interpretation(space: StateSpace, atom: str, raw: object) -> VariableValuation:
    if not isinstance(raw, dict):
        raise ModelError(f"atom {atom!r}: interpretation must be an object")
    if "*" in raw:
        if len(raw) != 1:
            raise ModelError(f"atom {atom!r}: '*' shorthand cannot be mixed with per-state entries")
        return VariableValuation.constant(space, _parse_members(space, atom, raw["*"]))
    interp = {}
    for state, members in raw.items():
        if state not in space:
            raise ModelError(f"atom {atom!r}: undeclared state {state!r}")
        interp[state] = _parse_members(space, atom, members)
    return VariableValuation.from_mapping(space, interp)


def _parse_members(space: StateSpace, atom: str, raw: object):
    if not isinstance(raw, list):
        raise ModelError(f"atom {atom!r}: interpretation values must be lists of states")
    for name in raw:
        if name not in space:
            raise ModelError(f"atom {atom!r}: undeclared state {name!r}")
    return space.subset(raw)


def parse_document(data: dict) -> ModelDocument:
    """Validate a decoded JSON object into a model and its measures."""
    if not isinstance(data, dict):
        raise ModelError("model document must be a JSON object")
    unknown = set(data) - {"states", "atoms", "measures"}
    if unknown:
        raise ModelError(f"unknown document key: {sorted(unknown)[0]!r}")
    if "states" not in data or not isinstance(data["states"], list):
        raise ModelError("document must declare a 'states' list")
    space = StateSpace(tuple(data["states"]))

    atoms = {}
    raw_atoms = data.get("atoms", {})
    if not isinstance(raw_atoms, dict):
        raise ModelError("'atoms' must be an object")
    for atom, raw in raw_atoms.items():
        atoms[atom] = _parse_interpretation(space, atom, raw)
    model = Model(space, atoms)

    measures = {}
    raw_measures = data.get("measures", {})
    if not isinstance(raw_measures, dict):
        raise ModelError("'measures' must be an object")
    for name, raw in raw_measures.items():
        if not name:
            raise ModelError("measure names must be nonempty")
        if not isinstance(raw, dict):
            raise ModelError(f"measure {name!r} must be an object")
        weights = {}
        for state, value in raw.items():
            if state not in space:
                raise ModelError(f"measure {name!r}: undeclared state {state!r}")
            weights[state] = _parse_rational(value, f"measure {name!r}, state {state!r}")
        try:
            measures[name] = ProbabilityMeasure.from_weights(space, weights)
        except ModelError as exc:
            raise ModelError(f"measure {name!r}: {exc}") from None
    return ModelDocument(model, measures)


def load_document(path: "str | Path") -> ModelDocument:
    """Read and validate a model document from disk."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ModelError(f"cannot read model document {str(path)!r}: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelError(f"invalid JSON in model document {str(path)!r}: {exc}") from None
    return parse_document(data)
