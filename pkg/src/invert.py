import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import AlphabetMismatch, NotInvertible, UnknownState, WordError
from .machine import Machine
from .words import Word

INVERSE_MARKS = ("^-1", "⁻¹")


@dataclass(frozen=True)
class InverseMachine(Machine):
    """The inverse of an invertible machine, over the same states.

    q*′a = b and q∘′a = q∘b, where q*b = a.
    """
    source: Machine


@dataclass(frozen=True)
class SignedLetter:
    """A generator q or its inverse q⁻¹."""
    state: str
    inverse: bool = False

    @classmethod
    def parse(cls, token: str) -> 'SignedLetter':
        for mark in INVERSE_MARKS:
            if token.endswith(mark):
                return cls(token[:-len(mark)], True)
        return cls(token)

    def __str__(self):
        return f"{self.state}^-1" if self.inverse else self.state


Letter = Union[str, SignedLetter]


def _as_letter(letter: Letter) -> SignedLetter:
    return letter if isinstance(letter, SignedLetter) else SignedLetter.parse(letter)


def parse_generator_word(text: str, states: Sequence[str]) -> List[SignedLetter]:
    """Split text like `q0 q0^-1`, `p.q` or `pq` into generator letters.

    Letters may be separated by spaces or dots; without separators the
    longest matching state name wins.
    """
    names = "|".join(re.escape(q) for q in sorted(states, key=len, reverse=True))
    marks = "|".join(re.escape(mark) for mark in INVERSE_MARKS)
    pattern = re.compile(rf"[\s.]*({names})({marks})?")
    letters = []
    position = 0
    text = text.strip()
    while position < len(text):
        match = pattern.match(text, position)
        if not match or match.end() == position:
            raise WordError(f"Cannot read generator word '{text}' at position {position}")
        letters.append(SignedLetter(match.group(1), match.group(2) is not None))
        position = match.end()
    return letters


def format_generator_word(letters: Sequence[Letter]) -> str:
    return " ".join(str(_as_letter(letter)) for letter in letters)


def _check_square(m: Machine) -> None:
    if set(m.input_alphabet) != set(m.output_alphabet):
        raise AlphabetMismatch(f"machine {m.name} has different input and output alphabets")


def non_invertible_state(m: Machine) -> Optional[str]:
    """First state whose letter map is not a permutation, or None."""
    _check_square(m)
    for q in m.states:
        if len(set(m.letter_map(q).values())) != len(m.input_alphabet):
            return q
    return None


def is_invertible(m: Machine) -> bool:
    return non_invertible_state(m) is None


def invert(m: Machine) -> InverseMachine:
    bad = non_invertible_state(m)
    if bad is not None:
        raise NotInvertible(bad)

    transition: Dict[Tuple[str, str], str] = {}
    output: Dict[Tuple[str, str], str] = {}
    for q in m.states:
        for b in m.input_alphabet:
            target, a = m.step(q, b)
            transition[(q, a)] = target
            output[(q, a)] = b
    return InverseMachine(
        name=f"{m.name}^-1",
        states=m.states,
        input_alphabet=m.input_alphabet,
        output_alphabet=m.input_alphabet,
        transition=transition,
        output=output,
        source=m,
    )


def act(m: Machine, signed_word: Sequence[Letter], u: Sequence[str]) -> Word:
    """Apply the letters of a signed generator word to u, left to right."""
    letters = [_as_letter(letter) for letter in signed_word]
    for letter in letters:
        if letter.state not in m.states:
            raise UnknownState(letter.state)
    inverse = invert(m) if any(letter.inverse for letter in letters) else None
    word = Word(u)
    for letter in letters:
        machine = inverse if letter.inverse else m
        word = machine.walk(letter.state, word)[1]
    return word
