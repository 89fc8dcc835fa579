"""Measures, conditioning, evidential belief, mass functions, combination."""

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from evidential import (
    Atom,
    MassFunction,
    Model,
    ModelError,
    ProbabilityMeasure,
    StateSpace,
    TotalConflictError,
    UndefinedConditioningError,
    VariableValuation,
    bel,
    degree,
    degree_given,
    dempster_combine,
    lift_event,
    mass_from_evidence,
    parse,
    pointwise_combine,
    pointwise_condition,
    truth_set,
)

import gens
import oracles

PBAR = Atom("pbar")
H = Atom("h")
A = Atom("a")


class TestProbabilityMeasure:
    def test_fixture_measures_are_valid(self, coinflip):
        pi = coinflip.measure("pi")
        assert pi.of_state("H-acc") == Fraction(3, 10)
        prime = coinflip.measure("piPrime")
        assert prime.of_state("T-acc") == Fraction(1, 2)

    def test_sum_must_be_one(self):
        space = StateSpace(("a", "b"))
        with pytest.raises(ModelError, match="sum to 1"):
            ProbabilityMeasure.from_weights(space, {"a": Fraction(1, 2), "b": Fraction(2, 5)})

    def test_negative_weight_rejected(self):
        space = StateSpace(("a", "b"))
        with pytest.raises(ModelError, match="negative"):
            ProbabilityMeasure.from_weights(space, {"a": Fraction(3, 2), "b": Fraction(-1, 2)})

    def test_missing_state_rejected(self):
        space = StateSpace(("a", "b"))
        with pytest.raises(ModelError, match="'b'"):
            ProbabilityMeasure.from_weights(space, {"a": Fraction(1)})

    def test_float_weights_rejected(self):
        space = StateSpace(("a", "b"))
        with pytest.raises(ModelError, match="float"):
            ProbabilityMeasure.from_weights(space, {"a": 0.5, "b": 0.5})

    def test_event_probability(self, coinflip):
        model, pi = coinflip.model, coinflip.measure("pi")
        assert pi.of(model.atom_truth_set("h")) == Fraction(1, 2)
        assert pi.of(model.space.empty()) == 0
        assert pi.of(model.atom_truth_set("a")) == Fraction(3, 5)


class TestConditioning:
    def test_posterior_after_hearing_heads(self, coinflip):
        model, pi = coinflip.model, coinflip.measure("pi")
        posterior = pi.condition(model.atom_truth_set("pbar"))
        assert dict(posterior.items()) == {
            "H-acc": Fraction(3, 5),
            "H-sh": Fraction(1, 5),
            "H-st": Fraction(0),
            "T-acc": Fraction(0),
            "T-sh": Fraction(1, 5),
            "T-st": Fraction(0),
        }

    def test_posterior_under_trusting_prior(self, coinflip):
        model, prime = coinflip.model, coinflip.measure("piPrime")
        posterior = prime.condition(model.atom_truth_set("pbar"))
        expected = {name: Fraction(0) for name in model.space}
        expected["H-acc"] = Fraction(1)
        assert dict(posterior.items()) == expected

    def test_conditioning_on_sure_event_is_identity(self, coinflip):
        pi = coinflip.measure("pi")
        assert pi.condition(coinflip.model.space.full()) == pi

    def test_zero_probability_conditioning_undefined(self, coinflip):
        pi = coinflip.measure("pi")
        with pytest.raises(UndefinedConditioningError):
            pi.condition(coinflip.model.space.empty())


class TestDegrees:
    def test_conditional_degrees(self, coinflip):
        model = coinflip.model
        pi, prime = coinflip.measure("pi"), coinflip.measure("piPrime")
        assert degree_given(model, pi, H, PBAR) == Fraction(4, 5)
        assert degree_given(model, prime, H, PBAR) == 1
        assert degree_given(model, pi, A, PBAR) == Fraction(3, 5)

    def test_unconditional_degrees(self, coinflip):
        model, pi = coinflip.model, coinflip.measure("pi")
        assert degree(model, pi, H) == Fraction(1, 2)
        assert degree(model, pi, A) == Fraction(3, 5)

    def test_zero_probability_evidence(self, coinflip):
        model, prime = coinflip.model, coinflip.measure("piPrime")
        with pytest.raises(UndefinedConditioningError):
            degree_given(model, prime, H, parse("pbar & ~pbar"))


class TestEvidentialBelief:
    def test_skeptical_prior(self, coinflip):
        model, pi = coinflip.model, coinflip.measure("pi")
        assert bel(model, pi, PBAR, model.atom_truth_set("h")) == Fraction(3, 5)
        assert bel(model, pi, PBAR, model.atom_truth_set("a")) == 0

    def test_trusting_prior(self, coinflip):
        model, prime = coinflip.model, coinflip.measure("piPrime")
        assert bel(model, prime, PBAR, model.atom_truth_set("h")) == 1
        assert bel(model, prime, PBAR, model.atom_truth_set("a")) == 0

    def test_zero_probability_evidence_undefined(self, coinflip):
        model, pi = coinflip.model, coinflip.measure("pi")
        with pytest.raises(UndefinedConditioningError):
            bel(model, pi, parse("pbar & ~pbar"), model.space.full())

    def test_non_factivity(self, coinflip):
        """Full belief in an event strictly stronger than the evidence's truth set."""
        model, prime = coinflip.model, coinflip.measure("piPrime")
        h_set = model.atom_truth_set("h")
        assert bel(model, prime, PBAR, h_set) == 1
        assert not model.atom_truth_set("pbar") <= h_set

    def test_maximal_gap_below_conditional_probability(self, coinflip):
        model, prime = coinflip.model, coinflip.measure("piPrime")
        gap = degree_given(model, prime, A, PBAR) - bel(model, prime, PBAR, model.atom_truth_set("a"))
        assert gap == 1

    @given(gens.spaces(), st.data())
    def test_constant_evidence_ignores_the_prior(self, space, data):
        seed = data.draw(st.integers(0, 2**32 - 1))
        rng = random.Random(seed)
        evidence_value = gens.random_set(rng, space)
        event = gens.random_set(rng, space)
        measure = gens.random_measure(rng, space)
        if measure.of(evidence_value) == 0:
            return
        model = Model(space, {"e": lift_event(space, evidence_value)})
        result = bel(model, measure, Atom("e"), event)
        assert result == (1 if evidence_value <= event else 0)


class TestMassFromEvidence:
    def test_skeptical_prior_masses(self, coinflip):
        model, pi = coinflip.model, coinflip.measure("pi")
        mass = mass_from_evidence(model, pi, PBAR)
        assert dict(mass.items()) == {
            model.space.subset(["H-acc", "H-sh"]): Fraction(3, 5),
            model.space.subset(["H-acc", "H-sh", "T-sh"]): Fraction(2, 5),
        }
        expected = oracles.mass_by_preimage(
            oracles.as_weights(pi), oracles.as_interp(model.valuation("pbar"))
        )
        assert oracles.as_mass_dict(mass) == expected

    def test_trusting_prior_masses(self, coinflip):
        model, prime = coinflip.model, coinflip.measure("piPrime")
        mass = mass_from_evidence(model, prime, PBAR)
        assert dict(mass.items()) == {
            model.space.subset(["H-acc", "H-sh"]): Fraction(1),
        }

    def test_constant_evidence_masses(self, coinflip):
        model, pi = coinflip.model, coinflip.measure("pi")
        mass = mass_from_evidence(model, pi, H)
        assert dict(mass.items()) == {model.atom_truth_set("h"): Fraction(1)}

    def test_belief_from_mass_matches_direct_belief(self, coinflip):
        model, pi = coinflip.model, coinflip.measure("pi")
        mass = mass_from_evidence(model, pi, PBAR)
        assert mass.belief(model.atom_truth_set("h")) == Fraction(3, 5)

    def test_vacuous_mass_beliefs(self, coinflip):
        space = coinflip.model.space
        vacuous = MassFunction.vacuous(space)
        assert vacuous.belief(space.full()) == 1
        assert vacuous.belief(space.subset(["H-acc"])) == 0

    def test_belief_in_everything_is_one(self, coinflip):
        model, pi = coinflip.model, coinflip.measure("pi")
        for evidence in (PBAR, H, parse("pbar | a")):
            mass = mass_from_evidence(model, pi, evidence)
            assert mass.belief(model.space.full()) == 1


class TestMassFunctionValidation:
    def setup_method(self):
        self.space = StateSpace(("a", "b"))

    def test_empty_set_cannot_carry_mass(self):
        with pytest.raises(ModelError, match="empty"):
            MassFunction(self.space, {self.space.empty(): Fraction(1)})

    def test_masses_must_be_positive(self):
        with pytest.raises(ModelError, match="positive"):
            MassFunction(
                self.space,
                {self.space.full(): Fraction(3, 2), self.space.subset(["a"]): Fraction(-1, 2)},
            )

    def test_zero_entries_are_dropped(self):
        sparse = MassFunction(
            self.space,
            {self.space.full(): Fraction(1), self.space.subset(["a"]): Fraction(0)},
        )
        assert sparse == MassFunction.vacuous(self.space)
        assert len(sparse.items()) == 1

    def test_masses_must_sum_to_one(self):
        with pytest.raises(ModelError, match="sum to 1"):
            MassFunction(self.space, {self.space.full(): Fraction(1, 2)})

    def test_structural_equality(self):
        m1 = MassFunction(self.space, {self.space.full(): Fraction(1)})
        m2 = MassFunction.vacuous(self.space)
        assert m1 == m2


class TestDempsterCombination:
    def test_worked_three_state_case(self):
        space = StateSpace(("1", "2", "3"))
        m1 = MassFunction(
            space,
            {space.subset(["1", "2"]): Fraction(1, 2), space.full(): Fraction(1, 2)},
        )
        m2 = MassFunction(space, {space.subset(["2", "3"]): Fraction(1)})
        combined = dempster_combine(m1, m2)
        assert dict(combined.items()) == {
            space.subset(["2"]): Fraction(1, 2),
            space.subset(["2", "3"]): Fraction(1, 2),
        }
        assert oracles.as_mass_dict(combined) == oracles.dempster_by_products(
            oracles.as_mass_dict(m1), oracles.as_mass_dict(m2)
        )

    def test_vacuous_is_an_identity(self, coinflip):
        model, pi = coinflip.model, coinflip.measure("pi")
        mass = mass_from_evidence(model, pi, PBAR)
        assert dempster_combine(mass, MassFunction.vacuous(model.space)) == mass

    def test_total_conflict_is_undefined(self):
        space = StateSpace(("1", "2"))
        m1 = MassFunction(space, {space.subset(["1"]): Fraction(1)})
        m2 = MassFunction(space, {space.subset(["2"]): Fraction(1)})
        with pytest.raises(TotalConflictError):
            dempster_combine(m1, m2)

    def test_mismatched_spaces_rejected(self):
        m1 = MassFunction.vacuous(StateSpace(("a", "b")))
        m2 = MassFunction.vacuous(StateSpace(("a", "c")))
        with pytest.raises(ModelError):
            dempster_combine(m1, m2)

    @given(gens.spaces(), st.data())
    def test_commutativity(self, space, data):
        seed = data.draw(st.integers(0, 2**32 - 1))
        rng = random.Random(seed)
        m1 = gens.random_mass_function(rng, space)
        m2 = gens.random_mass_function(rng, space)
        try:
            assert dempster_combine(m1, m2) == dempster_combine(m2, m1)
        except TotalConflictError:
            with pytest.raises(TotalConflictError):
                dempster_combine(m2, m1)

    @given(gens.spaces(), st.data())
    def test_associativity_without_conflict(self, space, data):
        seed = data.draw(st.integers(0, 2**32 - 1))
        rng = random.Random(seed)
        masses = [gens.random_mass_function(rng, space) for _ in range(3)]
        try:
            left = dempster_combine(dempster_combine(masses[0], masses[1]), masses[2])
            right = dempster_combine(masses[0], dempster_combine(masses[1], masses[2]))
        except TotalConflictError:
            return
        assert left == right


class TestPointwiseCombination:
    def test_self_combination_is_a_fixed_point(self, coinflip):
        model, pi = coinflip.model, coinflip.measure("pi")
        assert pointwise_combine(model, pi, PBAR, PBAR) == mass_from_evidence(model, pi, PBAR)

    def test_dempster_self_combination_is_not(self, coinflip):
        model, pi = coinflip.model, coinflip.measure("pi")
        mass = mass_from_evidence(model, pi, PBAR)
        assert dempster_combine(mass, mass) != mass

    def test_tautological_evidence_is_an_identity(self, coinflip):
        model, pi = coinflip.model, coinflip.measure("pi")
        tautology = parse("h | ~h")
        assert pointwise_combine(model, pi, PBAR, tautology) == mass_from_evidence(model, pi, PBAR)

    def test_lifted_full_event_is_an_identity(self, coinflip):
        space = coinflip.model.space
        extended = Model(
            space, {**coinflip.model.atoms, "top": lift_event(space, space.full())}
        )
        pi = coinflip.measure("pi")
        assert pointwise_combine(extended, pi, PBAR, Atom("top")) == mass_from_evidence(
            extended, pi, PBAR
        )

    def test_report_combined_with_truth(self, coinflip):
        model, pi = coinflip.model, coinflip.measure("pi")
        combined = pointwise_combine(model, pi, PBAR, H)
        assert dict(combined.items()) == {
            model.space.subset(["H-acc", "H-sh"]): Fraction(1),
        }
        expected = oracles.mass_by_preimage(
            oracles.as_weights(pi),
            {
                state: frozenset(left & right)
                for (state, left), (_, right) in zip(
                    model.valuation("pbar").items(), model.valuation("h").items()
                )
            },
        )
        assert oracles.as_mass_dict(combined) == expected

    def test_zero_probability_conjunction_undefined(self, coinflip):
        model, pi = coinflip.model, coinflip.measure("pi")
        with pytest.raises(UndefinedConditioningError):
            pointwise_combine(model, pi, PBAR, parse("~pbar"))


class TestPointwiseConditioning:
    def test_heads_given_report(self, coinflip):
        model, pi = coinflip.model, coinflip.measure("pi")
        expected = oracles.pointwise_condition_by_terms(
            oracles.as_weights(pi),
            oracles.as_interp(model.valuation("pbar")),
            frozenset(model.atom_truth_set("h")),
        )
        assert expected == Fraction(19, 25)
        assert pointwise_condition(model, pi, H, PBAR) == Fraction(19, 25)

    def test_tautology_can_fall_below_one(self, coinflip):
        """The empty interpretation is skipped without renormalizing, so the
        surviving weights sum to 4/5 here rather than 1."""
        model, pi = coinflip.model, coinflip.measure("pi")
        assert pointwise_condition(model, pi, parse("h | ~h"), PBAR) == Fraction(4, 5)

    def test_constant_evidence_reduces_to_classical_conditioning(self, coinflip):
        model, pi = coinflip.model, coinflip.measure("pi")
        assert pointwise_condition(model, pi, A, H) == degree_given(model, pi, A, H)

    def test_undefined_when_every_interpretation_vanishes(self):
        space = StateSpace(("x", "y"))
        model = Model(
            space,
            {
                "e": VariableValuation.from_mapping(space, {"x": ["y"], "y": ["y"]}),
                "f": VariableValuation.constant(space, space.full()),
            },
        )
        measure = ProbabilityMeasure.from_weights(space, {"x": Fraction(1), "y": Fraction(0)})
        with pytest.raises(UndefinedConditioningError):
            pointwise_condition(model, measure, Atom("f"), Atom("e"))


class TestBeliefProperties:
    @given(gens.spaces(), st.data())
    def test_bounds_and_monotonicity(self, space, data):
        """Coherent evidence: belief is bounded by the posterior, certain of the
        evidence's own truth set, monotone, and superadditive."""
        seed = data.draw(st.integers(0, 2**32 - 1))
        rng = random.Random(seed)
        model = gens.coherent_model(rng, space)
        measure = gens.random_measure(rng, space)
        evidence = gens.evidence_with_support(
            rng, model, measure, factory=gens.random_positive_formula
        )
        if evidence is None:
            return
        evidence_set = truth_set(model, evidence)
        posterior = measure.condition(evidence_set)

        event = gens.random_set(rng, space)
        assert bel(model, measure, evidence, event) <= posterior.of(event)

        assert bel(model, measure, evidence, space.full()) == 1
        assert bel(model, measure, evidence, evidence_set) == 1
        assert bel(model, measure, evidence, space.empty()) == 0

        larger = event | gens.random_set(rng, space)
        assert bel(model, measure, evidence, event) <= bel(model, measure, evidence, larger)

        other = gens.random_set(rng, space) - event
        assert bel(model, measure, evidence, event | other) >= bel(
            model, measure, evidence, event
        ) + bel(model, measure, evidence, other)

    def test_incoherent_evidence_can_disbelieve_its_own_truth_set(self, coinflip):
        """Certainty in the evidence's truth set rests on coherence: the negated
        report interprets, at some truth-set states, to sets that overrun the
        truth set, so none of them entail it."""
        model, pi = coinflip.model, coinflip.measure("pi")
        negated = parse("~pbar")
        negated_set = truth_set(model, negated)
        assert pi.of(negated_set) > 0
        assert bel(model, pi, negated, negated_set) == 0

    @given(gens.spaces(), st.data())
    def test_induced_mass_agrees_with_belief_everywhere(self, space, data):
        seed = data.draw(st.integers(0, 2**32 - 1))
        rng = random.Random(seed)
        model = gens.random_model(rng, space)
        measure = gens.random_measure(rng, space)
        evidence = gens.evidence_with_support(rng, model, measure)
        if evidence is None:
            return
        mass = mass_from_evidence(model, measure, evidence)
        for event in space.powerset():
            assert mass.belief(event) == bel(model, measure, evidence, event)
