"""Bundled example models."""

from __future__ import annotations

import json
from importlib import resources

from ..document import ModelDocument, parse_document

__all__ = ["coinflip", "FIXTURE_NAMES"]

FIXTURE_NAMES = ("coinflip",)


def _load(name: str) -> ModelDocument:
    text = resources.files(__package__).joinpath(f"{name}.json").read_text(encoding="utf-8")
    return parse_document(json.loads(text))


def coinflip() -> ModelDocument:
    """The six-state coin report model: a fair coin, a friend of uncertain
    disposition, and the statement "Heads" under both its naive and its
    coherent reading, with two priors attached."""
    return _load("coinflip")
