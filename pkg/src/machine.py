import logging
from collections import deque
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Set, Tuple

from .errors import (DuplicateTransition, EmptyAlphabet, MachineError, MissingTransition,
                     UnknownState, UnknownSymbol)
from .words import UltimatelyPeriodicWord, Word

# (state, input symbol, next state, output symbol)
Row = Tuple[str, str, str, str]


@dataclass
class MachineDescription:
    """An unchecked machine description, as read from a file or built by hand."""
    name: str
    states: List[str]
    input_alphabet: List[str]
    output_alphabet: List[str]
    rows: List[Row] = field(default_factory=list)
    start: Optional[str] = None


@dataclass(frozen=True)
class Machine:
    """A Mealy machine ⟨Q, A, B, ∘, *⟩ with total transition and output tables.

    States and symbols keep their declaration order; every iteration in the
    toolkit follows it.
    """
    name: str
    states: Tuple[str, ...]
    input_alphabet: Tuple[str, ...]
    output_alphabet: Tuple[str, ...]
    transition: Mapping[Tuple[str, str], str]
    output: Mapping[Tuple[str, str], str]

    @classmethod
    def from_table(cls, name: str, table: Mapping[str, Mapping[str, Tuple[str, str]]],
                   input_alphabet: Optional[Sequence[str]] = None,
                   output_alphabet: Optional[Sequence[str]] = None) -> 'Machine':
        """Build a machine from {state: {input: (next state, output)}}."""
        states = list(table)
        if input_alphabet is None:
            input_alphabet = list(next(iter(table.values()), {}))
        if output_alphabet is None:
            output_alphabet = input_alphabet
        rows = [(q, a, target, b) for q, arcs in table.items() for a, (target, b) in arcs.items()]
        return validate(MachineDescription(name, states, list(input_alphabet), list(output_alphabet), rows))

    @classmethod
    def identity(cls, alphabet: Sequence[str], name: str = "I", states: Sequence[str] = ("e",)) -> 'Machine':
        """Identity machine; extra states are equivalent copies cycling into each other."""
        states = tuple(states)
        table = {q: {a: (states[(i + 1) % len(states)], a) for a in alphabet} for i, q in enumerate(states)}
        return cls.from_table(name, table, alphabet, alphabet)

    def step(self, q: str, a: str) -> Tuple[str, str]:
        """Return (q∘a, q*a)."""
        try:
            return self.transition[(q, a)], self.output[(q, a)]
        except KeyError:
            if q not in self.states:
                raise UnknownState(q) from None
            raise UnknownSymbol(a) from None

    def walk(self, q: str, u: Sequence[str]) -> Tuple[str, Word]:
        """Return (q∘u, q*u)."""
        if q not in self.states:
            raise UnknownState(q)
        produced = []
        for a in u:
            q, b = self.step(q, a)
            produced.append(b)
        return q, Word(produced)

    def at(self, q: str) -> 'InitialMachine':
        return InitialMachine(self, q)

    def letter_map(self, q: str) -> Dict[str, str]:
        """The one-letter map a ↦ q*a."""
        return {a: self.step(q, a)[1] for a in self.input_alphabet}

    def rows(self) -> Iterator[Row]:
        for q in self.states:
            for a in self.input_alphabet:
                yield q, a, self.transition[(q, a)], self.output[(q, a)]

    def is_output_surjective(self) -> bool:
        return set(self.output.values()) == set(self.output_alphabet)

    def restrict(self, keep: Iterable[str]) -> 'Machine':
        """Restrict to a set of states closed under ∘, keeping declaration order."""
        keep = set(keep)
        states = tuple(q for q in self.states if q in keep)
        return replace(
            self,
            states=states,
            transition={(q, a): self.transition[(q, a)] for q in states for a in self.input_alphabet},
            output={(q, a): self.output[(q, a)] for q in states for a in self.input_alphabet},
        )

    def renamed(self, name: str) -> 'Machine':
        return replace(self, name=name)

    def __str__(self):
        return f"Machine({self.name}, states={len(self.states)}, in={' '.join(self.input_alphabet)}, out={' '.join(self.output_alphabet)})"


@dataclass(frozen=True)
class InitialMachine:
    """A machine with a designated start state; denotes u ↦ q₀*u."""
    machine: Machine
    start: str

    def __post_init__(self):
        if self.start not in self.machine.states:
            raise UnknownState(self.start)

    @property
    def name(self) -> str:
        return self.machine.name

    def run(self, u: Sequence[str]) -> Tuple[str, Word]:
        """Return (q₀∘u, q₀*u)."""
        return self.machine.walk(self.start, u)

    def run_up(self, x: UltimatelyPeriodicWord, n: int) -> Word:
        """Output on the first n symbols of an ultimately periodic word."""
        return self.run(x.prefix(n))[1]

    def reachable_states(self) -> Set[str]:
        seen = {self.start}
        queue = deque([self.start])
        while queue:
            q = queue.popleft()
            for a in self.machine.input_alphabet:
                target = self.machine.transition[(q, a)]
                if target not in seen:
                    seen.add(target)
                    queue.append(target)
        return seen

    def __call__(self, u: Sequence[str]) -> Word:
        return self.run(u)[1]

    def __str__(self):
        return f"{self.machine}@{self.start}"


def _check_unique(items: Sequence[str], what: str) -> None:
    if len(set(items)) != len(items):
        raise MachineError(f"Duplicate names among {what}: {' '.join(items)}")


def validate(description: MachineDescription) -> Machine:
    """Check totality and membership of a machine description and build the Machine."""
    if not description.states:
        raise MachineError(f"Machine {description.name} has no states")
    if not description.input_alphabet:
        raise EmptyAlphabet("input")
    if not description.output_alphabet:
        raise EmptyAlphabet("output")
    _check_unique(description.states, "states")
    _check_unique(description.input_alphabet, "input symbols")
    _check_unique(description.output_alphabet, "output symbols")

    states = set(description.states)
    inputs = set(description.input_alphabet)
    outputs = set(description.output_alphabet)
    transition: Dict[Tuple[str, str], str] = {}
    output: Dict[Tuple[str, str], str] = {}
    for q, a, target, b in description.rows:
        if q not in states:
            raise UnknownState(q)
        if a not in inputs:
            raise UnknownSymbol(a)
        if target not in states:
            raise UnknownState(target)
        if b not in outputs:
            raise UnknownSymbol(b)
        if (q, a) in transition:
            raise DuplicateTransition(q, a)
        transition[(q, a)] = target
        output[(q, a)] = b

    for q in description.states:
        for a in description.input_alphabet:
            if (q, a) not in transition:
                raise MissingTransition(q, a)

    if description.start is not None and description.start not in states:
        raise UnknownState(description.start)

    machine = Machine(
        name=description.name,
        states=tuple(description.states),
        input_alphabet=tuple(description.input_alphabet),
        output_alphabet=tuple(description.output_alphabet),
        transition=transition,
        output=output,
    )
    if not machine.is_output_surjective():
        logging.warning(f"Output map of machine {machine.name} is not surjective onto its output alphabet")
    return machine
