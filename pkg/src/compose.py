import logging
from dataclasses import dataclass, replace
from typing import Dict, Iterable, Mapping, Tuple

from .errors import AlphabetMismatch, NotABijection
from .machine import InitialMachine, Machine


@dataclass(frozen=True)
class CascadeMachine(Machine):
    """Serial composition of two machines.

    States are pairs (q′, q) of a second-machine state and a first-machine
    state, ordered by second-machine index, then first-machine index.
    """
    first: Machine
    second: Machine
    components: Mapping[str, Tuple[str, str]]

    def restrict(self, keep: Iterable[str]) -> 'CascadeMachine':
        restricted = super().restrict(keep)
        return replace(restricted, components={q: self.components[q] for q in restricted.states})


def pair_label(second_state: str, first_state: str) -> str:
    return f"({second_state},{first_state})"


def cascade(first: InitialMachine, second: InitialMachine) -> InitialMachine:
    """Feed the output of `first` into `second`.

    (q′,q)∘a = (q′∘(q*a), q∘a) and (q′,q)*a = q′*(q*a).
    """
    m1, m2 = first.machine, second.machine
    missing = set(m1.output_alphabet) - set(m2.input_alphabet)
    if missing:
        raise AlphabetMismatch(
            f"outputs {' '.join(sorted(missing))} of {m1.name} are not inputs of {m2.name}")

    components: Dict[str, Tuple[str, str]] = {}
    transition: Dict[Tuple[str, str], str] = {}
    output: Dict[Tuple[str, str], str] = {}
    for q2 in m2.states:
        for q1 in m1.states:
            label = pair_label(q2, q1)
            components[label] = (q2, q1)
            for a in m1.input_alphabet:
                next1, b = m1.step(q1, a)
                next2, c = m2.step(q2, b)
                transition[(label, a)] = pair_label(next2, next1)
                output[(label, a)] = c

    product = CascadeMachine(
        name=f"{m1.name}|{m2.name}",
        states=tuple(components),
        input_alphabet=m1.input_alphabet,
        output_alphabet=m2.output_alphabet,
        transition=transition,
        output=output,
        first=m1,
        second=m2,
        components=components,
    )
    logging.debug(f"Cascade {product.name} has {len(product.states)} states")
    return InitialMachine(product, pair_label(second.start, first.start))


def trim(im: InitialMachine) -> InitialMachine:
    """Drop states unreachable from the start state."""
    reachable = im.reachable_states()
    if len(reachable) == len(im.machine.states):
        return im
    return InitialMachine(im.machine.restrict(reachable), im.start)


def relabel(im: InitialMachine, phi: Mapping[str, str]) -> InitialMachine:
    """Transport a machine over A to B along a bijection φ: A → B.

    The new machine computes v ↦ φ(f(φ⁻¹(v))).
    """
    m = im.machine
    if set(m.input_alphabet) != set(m.output_alphabet):
        raise AlphabetMismatch(f"machine {m.name} has different input and output alphabets")
    if set(phi) != set(m.input_alphabet):
        raise NotABijection(f"map is defined on {' '.join(sorted(phi))}, alphabet is {' '.join(m.input_alphabet)}")
    if len(set(phi.values())) != len(phi):
        raise NotABijection("two letters share an image")

    alphabet = tuple(phi[a] for a in m.input_alphabet)
    transition = {(q, phi[a]): m.transition[(q, a)] for q in m.states for a in m.input_alphabet}
    output = {(q, phi[a]): phi[m.output[(q, a)]] for q in m.states for a in m.input_alphabet}
    relabeled = Machine(
        name=f"{m.name}'",
        states=m.states,
        input_alphabet=alphabet,
        output_alphabet=alphabet,
        transition=transition,
        output=output,
    )
    return InitialMachine(relabeled, im.start)
