"""Exact-rational probability, evidentially supported belief, and mass functions.

Everything here computes with :class:`fractions.Fraction`; there is no
floating point anywhere, so all identities hold exactly.

Given a prior over a model's state space and an evidence formula, the
*evidentially supported belief* in an event is the conditional probability,
given that the evidence is true, that the evidence's interpretation entails
the event.  Grouping states by which event is the evidence's correct
interpretation induces a mass function whose belief function coincides with
evidentially supported belief.  Two ways to merge evidence are provided:
classical Dempster combination of mass functions, and pointwise combination,
which conjoins the evidence formulas and only ever intersects
interpretations indexed by the same underlying state.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterator, Mapping

from .errors import ModelError, TotalConflictError, UndefinedConditioningError
from .formula import And, Formula, STRICT
from .model import Model, StateSet, StateSpace
from .semantics import interpret, truth_set

__all__ = [
    "ProbabilityMeasure",
    "MassFunction",
    "degree",
    "degree_given",
    "bel",
    "mass_from_evidence",
    "dempster_combine",
    "pointwise_combine",
    "pointwise_condition",
]


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise ModelError(f"weights must be exact rationals, got float {value!r}")
    return Fraction(value)


@dataclass(frozen=True)
class ProbabilityMeasure:
    """Exact nonnegative weights per state, summing to one."""

    space: StateSpace
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(_as_fraction(w) for w in self.weights))
        if len(self.weights) != len(self.space):
            raise ModelError(
                f"measure must weight all {len(self.space)} states, got {len(self.weights)}"
            )
        for name, w in zip(self.space.states, self.weights):
            if w < 0:
                raise ModelError(f"negative weight {w} for state {name!r}")
        total = sum(self.weights)
        if total != 1:
            raise ModelError(f"weights must sum to 1, got {total}")

    @classmethod
    def from_weights(cls, space: StateSpace, weights: Mapping[str, object]) -> ProbabilityMeasure:
        """Build a measure from a state-name to rational mapping; must be total."""
        for name in weights:
            space.index(name)
        missing = [name for name in space.states if name not in weights]
        if missing:
            raise ModelError(f"measure missing weight for state {missing[0]!r}")
        return cls(space, tuple(_as_fraction(weights[name]) for name in space.states))

    def of(self, event: StateSet) -> Fraction:
        """The probability of an event: the sum of its states' weights."""
        if event.space != self.space:
            raise ModelError("event is over a different state space")
        return sum(
            (w for i, w in enumerate(self.weights) if event.mask >> i & 1),
            Fraction(0),
        )

    def of_state(self, name: str) -> Fraction:
        return self.weights[self.space.index(name)]

    def condition(self, event: StateSet) -> ProbabilityMeasure:
        """Bayesian conditioning on an event of positive probability."""
        total = self.of(event)
        if total == 0:
            raise UndefinedConditioningError(
                f"cannot condition on event {event} of probability zero"
            )
        return ProbabilityMeasure(
            self.space,
            tuple(
                w / total if event.mask >> i & 1 else Fraction(0)
                for i, w in enumerate(self.weights)
            ),
        )

    def items(self) -> Iterator[tuple[str, Fraction]]:
        return zip(self.space.states, self.weights)


@dataclass(frozen=True, eq=False)
class MassFunction:
    """Exact positive masses on nonempty events, summing to one.

    Only nonzero entries are stored; the empty set never carries mass.
    Equality is structural: same space, same sparse entries.
    """

    space: StateSpace
    masses: Mapping[StateSet, Fraction]

    def __post_init__(self):
        entries = {}
        for event, mass in self.masses.items():
            if event.space != self.space:
                raise ModelError("mass entry is over a different state space")
            mass = _as_fraction(mass)
            if mass < 0:
                raise ModelError(f"mass for {event} must be positive, got {mass}")
            if mass == 0:
                continue
            if event.mask == 0:
                raise ModelError("the empty set cannot carry mass")
            entries[event] = mass
        total = sum(entries.values(), Fraction(0))
        if total != 1:
            raise ModelError(f"masses must sum to 1, got {total}")
        object.__setattr__(self, "masses", MappingProxyType(entries))

    @classmethod
    def vacuous(cls, space: StateSpace) -> MassFunction:
        """All mass on the full space: total ignorance."""
        return cls(space, {space.full(): Fraction(1)})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MassFunction):
            return NotImplemented
        return self.space == other.space and self.masses == other.masses

    def of(self, event: StateSet) -> Fraction:
        return self.masses.get(event, Fraction(0))

    def items(self) -> list[tuple[StateSet, Fraction]]:
        """Entries sorted by bit-vector encoding, for deterministic output."""
        return sorted(self.masses.items(), key=lambda entry: entry[0].mask)

    def belief(self, event: StateSet) -> Fraction:
        """Total mass of all stored subsets of the event."""
        return sum(
            (mass for focal, mass in self.masses.items() if focal <= event),
            Fraction(0),
        )


def degree(model: Model, measure: ProbabilityMeasure, f: Formula, mode: str = STRICT) -> Fraction:
    """Degree of belief in a formula: the probability of its truth set."""
    return measure.of(truth_set(model, f, mode))


def degree_given(
    model: Model,
    measure: ProbabilityMeasure,
    of: Formula,
    given: Formula,
    mode: str = STRICT,
) -> Fraction:
    """Conditional degree of belief: probability of one truth set given another."""
    evidence_set = truth_set(model, given, mode)
    return measure.condition(evidence_set).of(truth_set(model, of, mode))


def _evidence_posterior(
    model: Model, measure: ProbabilityMeasure, evidence: Formula, mode: str
) -> tuple[StateSet, ProbabilityMeasure]:
    evidence_set = truth_set(model, evidence, mode)
    if measure.of(evidence_set) == 0:
        raise UndefinedConditioningError(
            f"evidence {evidence} has probability zero; belief is undefined"
        )
    return evidence_set, measure.condition(evidence_set)


def bel(
    model: Model,
    measure: ProbabilityMeasure,
    evidence: Formula,
    event: StateSet,
    mode: str = STRICT,
) -> Fraction:
    """Evidentially supported belief in an event.

    The conditional probability, given that the evidence is true, that the
    evidence's interpretation entails the event: the evidence must not
    merely accompany the event but guarantee it.
    """
    evidence_set, posterior = _evidence_posterior(model, measure, evidence, mode)
    mask = 0
    for i in range(len(model.space)):
        if interpret(model, evidence, model.space.states[i], mode) <= event:
            mask |= 1 << i
    return posterior.of(StateSet(model.space, mask) & evidence_set)


def mass_from_evidence(
    model: Model, measure: ProbabilityMeasure, evidence: Formula, mode: str = STRICT
) -> MassFunction:
    """The mass function induced by evidence under a prior.

    Each event in the image of the evidence's valuation receives the
    conditional probability that it is the correct interpretation.
    """
    evidence_set, posterior = _evidence_posterior(model, measure, evidence, mode)
    masses: dict[StateSet, Fraction] = {}
    for name in evidence_set:
        value = interpret(model, evidence, name, mode)
        masses[value] = masses.get(value, Fraction(0)) + posterior.of_state(name)
    return MassFunction(model.space, masses)


def dempster_combine(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Dempster's rule: normalized products over all intersecting pairs."""
    if m1.space != m2.space:
        raise ModelError("mass functions are over different state spaces")
    combined: dict[StateSet, Fraction] = {}
    normalizer = Fraction(0)
    for e1, w1 in m1.masses.items():
        for e2, w2 in m2.masses.items():
            meet = e1 & e2
            if meet.mask == 0:
                continue
            product = w1 * w2
            combined[meet] = combined.get(meet, Fraction(0)) + product
            normalizer += product
    if normalizer == 0:
        raise TotalConflictError("total conflict: every pair of focal sets is disjoint")
    return MassFunction(m1.space, {e: w / normalizer for e, w in combined.items()})


def pointwise_combine(
    model: Model,
    measure: ProbabilityMeasure,
    evidence1: Formula,
    evidence2: Formula,
    mode: str = STRICT,
) -> MassFunction:
    """Combine two bodies of evidence by conjoining them.

    Interpretations are intersected pointwise, so only sets indexed by the
    same underlying state ever meet; contrast with :func:`dempster_combine`,
    where any two overlapping focal sets contribute.
    """
    return mass_from_evidence(model, measure, And(evidence1, evidence2), mode)


def pointwise_condition(
    model: Model,
    measure: ProbabilityMeasure,
    of: Formula,
    evidence: Formula,
    mode: str = STRICT,
) -> Fraction:
    """EXPLORATORY: average conditional probability over interpretation events.

    Weights the probability of ``of``'s truth set conditional on each event
    the evidence might mean by the prior probability that it means it.
    Convention: the empty interpretation and interpretations of prior
    probability zero contribute nothing (their conditionals are undefined),
    and the surviving weights are NOT renormalized, so the result of a
    tautology can fall below one.  Raises when every term vanishes.
    """
    of_set = truth_set(model, of, mode)
    weights: dict[StateSet, Fraction] = {}
    for name in model.space.states:
        value = interpret(model, evidence, name, mode)
        weights[value] = weights.get(value, Fraction(0)) + measure.of_state(name)
    total = Fraction(0)
    survived = False
    for value, weight in weights.items():
        if value.mask == 0 or measure.of(value) == 0:
            continue
        survived = True
        total += measure.of(of_set & value) / measure.of(value) * weight
    if not survived:
        raise UndefinedConditioningError(
            "every interpretation of the evidence has probability zero or is empty"
        )
    return total
