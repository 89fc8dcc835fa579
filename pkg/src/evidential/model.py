"""Finite state spaces, events as bit-vector sets, and variable valuations.

A *variable valuation* assigns to every state the event that is the correct
interpretation of a proposition at that state; constant valuations recover
classical events.  The truth set of a valuation collects the states whose
own interpretation contains them, and a valuation is *coherent* when every
interpretation entails the truth of the proposition it interprets.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .errors import ModelError, UnknownAtomError

__all__ = [
    "StateSpace",
    "StateSet",
    "VariableValuation",
    "Model",
    "lift_event",
]


@dataclass(frozen=True)
class StateSpace:
    """An ordered, finite set of named states.

    Declaration order is canonical: it fixes each state's bit index and the
    order in which sets and measures are rendered.
    """

    states: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        if not self.states:
            raise ModelError("state space must be nonempty")
        seen = set()
        for name in self.states:
            if not isinstance(name, str) or not name:
                raise ModelError(f"state names must be nonempty strings, got {name!r}")
            if name in seen:
                raise ModelError(f"duplicate state name: {name!r}")
            seen.add(name)
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.states)})

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self) -> Iterator[str]:
        return iter(self.states)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ModelError(f"unknown state: {name!r}") from None

    def subset(self, names: Iterable[str]) -> StateSet:
        """The event containing exactly the given states."""
        mask = 0
        for name in names:
            mask |= 1 << self.index(name)
        return StateSet(self, mask)

    def singleton(self, name: str) -> StateSet:
        return StateSet(self, 1 << self.index(name))

    def empty(self) -> StateSet:
        return StateSet(self, 0)

    def full(self) -> StateSet:
        return StateSet(self, (1 << len(self.states)) - 1)

    def powerset(self) -> Iterator[StateSet]:
        """All 2^n subsets, in ascending bit-vector order."""
        for mask in range(1 << len(self.states)):
            yield StateSet(self, mask)


@dataclass(frozen=True)
class StateSet:
    """A subset of a state space, stored as a bit vector over state indices.

    All set algebra is exact.  Comparison operators are the subset order,
    as with ``frozenset``.
    """

    space: StateSpace
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask < (1 << len(self.space)):
            raise ModelError(f"set mask {self.mask} out of range for {len(self.space)} states")

    def _check_space(self, other: StateSet) -> None:
        if self.space != other.space:
            raise ModelError("state sets belong to different state spaces")

    def __contains__(self, name: object) -> bool:
        if not isinstance(name, str):
            return False
        return bool(self.mask >> self.space.index(name) & 1)

    def __iter__(self) -> Iterator[str]:
        for i, name in enumerate(self.space.states):
            if self.mask >> i & 1:
                yield name

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __and__(self, other: StateSet) -> StateSet:
        self._check_space(other)
        return StateSet(self.space, self.mask & other.mask)

    def __or__(self, other: StateSet) -> StateSet:
        self._check_space(other)
        return StateSet(self.space, self.mask | other.mask)

    def __sub__(self, other: StateSet) -> StateSet:
        self._check_space(other)
        return StateSet(self.space, self.mask & ~other.mask)

    def complement(self) -> StateSet:
        return StateSet(self.space, self.mask ^ self.space.full().mask)

    def __le__(self, other: StateSet) -> bool:
        self._check_space(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: StateSet) -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: StateSet) -> bool:
        self._check_space(other)
        return other <= self

    def __gt__(self, other: StateSet) -> bool:
        return other < self

    def issubset(self, other: StateSet) -> bool:
        return self <= other

    def names(self) -> tuple[str, ...]:
        return tuple(self)

    def __str__(self) -> str:
        return "{" + ",".join(self) + "}"


@dataclass(frozen=True)
class VariableValuation:
    """A total map from states to events: each state's correct interpretation.

    ``sets[i]`` is the interpretation at the state with index ``i``.
    """

    space: StateSpace
    sets: tuple[StateSet, ...]

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(self.sets))
        if len(self.sets) != len(self.space):
            raise ModelError(
                f"valuation must cover all {len(self.space)} states, got {len(self.sets)}"
            )
        for s in self.sets:
            if s.space != self.space:
                raise ModelError("valuation contains a set over a different state space")

    @classmethod
    def from_mapping(cls, space: StateSpace, interp: Mapping[str, Iterable[str]]) -> VariableValuation:
        """Build a valuation from state name to member-name lists; must be total."""
        for name in interp:
            space.index(name)
        sets = []
        for name in space.states:
            if name not in interp:
                raise ModelError(f"valuation missing interpretation for state {name!r}")
            value = interp[name]
            sets.append(value if isinstance(value, StateSet) else space.subset(value))
        return cls(space, tuple(sets))

    @classmethod
    def constant(cls, space: StateSpace, value: StateSet) -> VariableValuation:
        """The valuation that interprets identically at every state."""
        if value.space != space:
            raise ModelError("constant value is over a different state space")
        return cls(space, (value,) * len(space))

    def at(self, state: str) -> StateSet:
        """The interpretation at the named state."""
        return self.sets[self.space.index(state)]

    def items(self) -> Iterator[tuple[str, StateSet]]:
        return zip(self.space.states, self.sets)

    def is_constant(self) -> bool:
        return all(s == self.sets[0] for s in self.sets)

    def truth_set(self) -> StateSet:
        """The states whose own interpretation contains them."""
        mask = 0
        for i, s in enumerate(self.sets):
            mask |= s.mask & (1 << i)
        return StateSet(self.space, mask)

    def is_coherent(self) -> bool:
        """True iff every interpretation is contained in the truth set."""
        truth = self.truth_set()
        return all(s <= truth for s in self.sets)

    def coherence_closure(self) -> VariableValuation:
        """Intersect every interpretation with the truth set.

        The result is coherent and has the same truth set; already-coherent
        valuations (constants in particular) come back unchanged.
        """
        truth = self.truth_set()
        return VariableValuation(self.space, tuple(s & truth for s in self.sets))


class Model:
    """A state space together with named atoms bound to variable valuations.

    Immutable after construction; all queries are pure.
    """

    def __init__(self, space: StateSpace, atoms: Mapping[str, VariableValuation]):
        for name, valuation in atoms.items():
            if not isinstance(name, str) or not name:
                raise ModelError(f"atom names must be nonempty strings, got {name!r}")
            if valuation.space != space:
                raise ModelError(f"valuation for atom {name!r} is over a different state space")
        self._space = space
        self._atoms = dict(atoms)

    @property
    def space(self) -> StateSpace:
        return self._space

    @property
    def atoms(self) -> Mapping[str, VariableValuation]:
        return MappingProxyType(self._atoms)

    def valuation(self, atom: str) -> VariableValuation:
        try:
            return self._atoms[atom]
        except KeyError:
            raise UnknownAtomError(atom) from None

    def atom_truth_set(self, atom: str) -> StateSet:
        return self.valuation(atom).truth_set()

    def is_coherent(self, atom: str) -> bool:
        return self.valuation(atom).is_coherent()

    def coherence_closure(self, atom: str) -> VariableValuation:
        return self.valuation(atom).coherence_closure()


def lift_event(space: StateSpace, event: StateSet) -> VariableValuation:
    """Lift an event to the constant valuation whose truth set is that event."""
    return VariableValuation.constant(space, event)
