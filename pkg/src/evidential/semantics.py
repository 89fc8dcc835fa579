"""Pointwise interpretation of formulas and truth-set computation.

The interpretation of a formula at a state is an event, built recursively:
an atom's interpretation comes from its valuation, negation complements,
conjunction intersects; disjunction and material implication evaluate via
their expansions.  A formula's truth set collects the states whose own
interpretation contains them.

Meaning entailment is special: ``left => right`` is true at a state exactly
when left's interpretation there is contained in right's.  Its truth set is
defined directly.  In extended mode the connective may also appear nested,
where it denotes the constant function returning that truth set; in strict
mode interpreting it pointwise is an error.
"""

from __future__ import annotations

from .errors import EntailmentModeError
from .formula import And, Atom, Entails, Formula, Implies, Not, Or, STRICT, check_mode
from .model import Model, StateSet

__all__ = ["interpret", "truth_set"]


def interpret(model: Model, f: Formula, state: str, mode: str = STRICT) -> StateSet:
    """The interpretation of ``f`` at the named state."""
    check_mode(mode)
    return _interpret(model, f, model.space.index(state), mode)


def truth_set(model: Model, f: Formula, mode: str = STRICT) -> StateSet:
    """The set of states where ``f`` is true."""
    check_mode(mode)
    if isinstance(f, Entails):
        return _entailment_set(model, f, mode)
    mask = 0
    for i in range(len(model.space)):
        mask |= _interpret(model, f, i, mode).mask & (1 << i)
    return StateSet(model.space, mask)


def _interpret(model: Model, f: Formula, i: int, mode: str) -> StateSet:
    if isinstance(f, Atom):
        return model.valuation(f.name).sets[i]
    if isinstance(f, Not):
        return _interpret(model, f.operand, i, mode).complement()
    if isinstance(f, And):
        return _interpret(model, f.left, i, mode) & _interpret(model, f.right, i, mode)
    if isinstance(f, Or):
        return _interpret(model, f.left, i, mode) | _interpret(model, f.right, i, mode)
    if isinstance(f, Implies):
        return _interpret(model, f.left, i, mode).complement() | _interpret(model, f.right, i, mode)
    if isinstance(f, Entails):
        if mode == STRICT:
            raise EntailmentModeError(
                "entailment (=>) has no pointwise interpretation in strict mode"
            )
        return _entailment_set(model, f, mode)
    raise TypeError(f"not a formula node: {f!r}")


def _entailment_set(model: Model, f: Entails, mode: str) -> StateSet:
    mask = 0
    for i in range(len(model.space)):
        if _interpret(model, f.left, i, mode) <= _interpret(model, f.right, i, mode):
            mask |= 1 << i
    return StateSet(model.space, mask)
