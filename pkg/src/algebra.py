import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .compose import cascade, trim
from .defaults import DEFAULT_MAX_ELEMS, DEFAULT_MAX_LEN
from .errors import AlgebraError, AlphabetMismatch, EmptyWord, NotInvertible, UnknownState
from .invert import Letter, SignedLetter, _as_letter, act, invert, non_invertible_state, parse_generator_word
from .machine import InitialMachine, Machine
from .words import UltimatelyPeriodicWord


@dataclass(frozen=True)
class ElementCanon:
    """Canonical form of a restricted sequential function.

    The machine is trimmed, minimized and renumbered breadth-first from the
    start state; two elements are equal iff their tables are. The witness is
    the generator word the element was first reached by and takes no part in
    equality.
    """
    key: Tuple
    machine: InitialMachine = field(compare=False)
    witness: Tuple[str, ...] = field(default=(), compare=False)

    @property
    def size(self) -> int:
        return len(self.machine.machine.states)

    def label(self) -> str:
        return " ".join(self.witness) if self.witness else "λ"

    def __str__(self):
        return f"{self.label()} [{self.size} states]"


def _partition(machine: Machine, states: Sequence[str]) -> Dict[str, int]:
    """Coarsest partition with q ≡ q′ iff q*a = q′*a and q∘a ≡ q′∘a for all a."""
    alphabet = machine.input_alphabet

    def renumber(signatures: Dict[str, Tuple]) -> Dict[str, int]:
        ids: Dict[Tuple, int] = {}
        return {q: ids.setdefault(signatures[q], len(ids)) for q in states}

    block = renumber({q: tuple(machine.output[(q, a)] for a in alphabet) for q in states})
    while True:
        refined = renumber({
            q: (block[q], tuple(block[machine.transition[(q, a)]] for a in alphabet))
            for q in states
        })
        if len(set(refined.values())) == len(set(block.values())):
            return refined
        block = refined


def canonicalize(im: InitialMachine, witness: Sequence[str] = ()) -> ElementCanon:
    trimmed = trim(im)
    machine = trimmed.machine
    alphabet = machine.input_alphabet
    block = _partition(machine, machine.states)
    representative: Dict[int, str] = {}
    for q in machine.states:
        representative.setdefault(block[q], q)

    order = {block[im.start]: 0}
    queue = deque([block[im.start]])
    rows = []
    while queue:
        current = queue.popleft()
        q = representative[current]
        row = []
        for a in alphabet:
            target, b = machine.step(q, a)
            target_block = block[target]
            if target_block not in order:
                order[target_block] = len(order)
                queue.append(target_block)
            row.append((order[target_block], b))
        rows.append(tuple(row))

    if set(machine.output_alphabet) == set(alphabet):
        outputs = alphabet
    else:
        outputs = machine.output_alphabet
    names = [str(i) for i in range(len(rows))]
    canonical = Machine(
        name="canon",
        states=tuple(names),
        input_alphabet=alphabet,
        output_alphabet=outputs,
        transition={(names[i], a): names[row[k][0]] for i, row in enumerate(rows) for k, a in enumerate(alphabet)},
        output={(names[i], a): row[k][1] for i, row in enumerate(rows) for k, a in enumerate(alphabet)},
    )
    return ElementCanon((alphabet, tuple(rows)), InitialMachine(canonical, names[0]), tuple(witness))


def product(first: ElementCanon, second: ElementCanon) -> ElementCanon:
    """The element applying `first`, then `second`."""
    return canonicalize(trim(cascade(first.machine, second.machine)), first.witness + second.witness)


def _generator(m: Machine, letter: SignedLetter, inverse: Optional[Machine]) -> ElementCanon:
    if letter.state not in m.states:
        raise UnknownState(letter.state)
    source = inverse if letter.inverse else m
    return canonicalize(source.at(letter.state), (str(letter),))


def _check_square(m: Machine) -> None:
    if not set(m.output_alphabet) <= set(m.input_alphabet):
        raise AlphabetMismatch(f"outputs of {m.name} are not inputs, its states cannot be composed")


def element(m: Machine, x: Union[str, Sequence[Letter]]) -> ElementCanon:
    """Canonical form of x̄ = q̄₁ q̄₂ … (q̄₁ applied first)."""
    letters = parse_generator_word(x, m.states) if isinstance(x, str) else [_as_letter(letter) for letter in x]
    if not letters:
        raise EmptyWord()
    _check_square(m)
    inverse = invert(m) if any(letter.inverse for letter in letters) else None
    result = _generator(m, letters[0], inverse)
    for letter in letters[1:]:
        result = product(result, _generator(m, letter, inverse))
    return result


class Status(Enum):
    FINITE = "Finite"
    LOWER_BOUND_ONLY = "LowerBoundOnly"


@dataclass
class SemigroupResult:
    """Elements of ⟨𝔐⟩₊ (or Γ(𝔐) when signed) found within the bounds."""
    machine_name: str
    status: Status
    elements: List[ElementCanon]
    # generator label -> index of its element
    generators: List[Tuple[str, int]]
    cayley: Optional[List[List[int]]]
    max_elems: int
    max_len: int
    signed: bool

    @property
    def finite(self) -> bool:
        return self.status is Status.FINITE

    def find(self, e: ElementCanon) -> Optional[int]:
        for i, candidate in enumerate(self.elements):
            if candidate == e:
                return i
        return None


def enumerate_semigroup(m: Machine, max_elems: int = DEFAULT_MAX_ELEMS, max_len: int = DEFAULT_MAX_LEN,
                        signed: bool = False) -> SemigroupResult:
    """Breadth-first enumeration of the semigroup (or group) generated by the states of m.

    Elements come out ordered by shortest witness, then lexicographically
    over the generators (states in declaration order, inverses after).
    The result is Finite only when a whole length level adds nothing new
    and the product table closes.
    """
    _check_square(m)
    inverse = None
    letters = [SignedLetter(q) for q in m.states]
    if signed:
        bad = non_invertible_state(m)
        if bad is not None:
            raise NotInvertible(bad)
        inverse = invert(m)
        letters += [SignedLetter(q, True) for q in m.states]

    elements: List[ElementCanon] = []
    index: Dict[ElementCanon, int] = {}
    generators: List[Tuple[str, int]] = []
    expanding: List[ElementCanon] = []
    status = Status.FINITE

    def admit(candidate: ElementCanon) -> bool:
        nonlocal status
        if candidate in index:
            return True
        if len(elements) >= max_elems:
            status = Status.LOWER_BOUND_ONLY
            return False
        index[candidate] = len(elements)
        elements.append(candidate)
        level.append(candidate)
        return True

    level: List[ElementCanon] = []
    for letter in letters:
        g = _generator(m, letter, inverse)
        if g not in index:
            expanding.append(g)
        if not admit(g):
            break
        generators.append((str(letter), index[g]))

    length = 1
    while level and status is Status.FINITE:
        if length >= max_len:
            logging.info(f"Enumeration of {m.name} reached witness length {max_len}")
            status = Status.LOWER_BOUND_ONLY
            break
        current, level = level, []
        for e in current:
            for g in expanding:
                if not admit(product(e, g)):
                    break
            if status is not Status.FINITE:
                break
        length += 1
        logging.debug(f"Level {length} of {m.name}: {len(level)} new, {len(elements)} total")

    cayley = None
    if status is Status.FINITE:
        cayley = []
        for left in elements:
            row = []
            for right in elements:
                j = index.get(product(left, right))
                if j is None:
                    logging.warning(f"Product table of {m.name} does not close")
                    status = Status.LOWER_BOUND_ONLY
                    break
                row.append(j)
            if status is not Status.FINITE:
                cayley = None
                break
            cayley.append(row)
    else:
        logging.info(f"Enumeration of {m.name} stopped with {len(elements)} elements")

    return SemigroupResult(m.name, status, elements, generators, cayley, max_elems, max_len, signed)


def _require_table(result: SemigroupResult) -> List[List[int]]:
    if result.cayley is None:
        raise AlgebraError(f"Semigroup of {result.machine_name} has no closed product table")
    return result.cayley


def order_of(result: SemigroupResult, i: int) -> int:
    """o(a) = |⟨a⟩|, the number of distinct powers of element i."""
    cayley = _require_table(result)
    seen = []
    current = i
    while current not in seen:
        seen.append(current)
        current = cayley[current][i]
    return len(seen)


def power_order(e: ElementCanon, bound: int = DEFAULT_MAX_ELEMS) -> Optional[int]:
    """Number of distinct powers of e, or None if there are more than bound."""
    seen = {e}
    current = e
    while len(seen) <= bound:
        current = product(current, e)
        if current in seen:
            return len(seen)
        seen.add(current)
    return None


def identity_index(result: SemigroupResult) -> Optional[int]:
    cayley = _require_table(result)
    size = len(cayley)
    for e in range(size):
        if all(cayley[e][j] == j and cayley[j][e] == j for j in range(size)):
            return e
    return None


def inverse_index(result: SemigroupResult, i: int) -> Optional[int]:
    cayley = _require_table(result)
    e = identity_index(result)
    if e is None:
        return None
    for j in range(len(cayley)):
        if cayley[i][j] == e and cayley[j][i] == e:
            return j
    return None


Pattern = Union[str, Sequence[Letter]]


def alternating_patterns(a: str, b: str, k: int) -> List[List[str]]:
    """a, ab, aba, ... up to length k."""
    return [[a if i % 2 == 0 else b for i in range(n)] for n in range(1, k + 1)]


def power_patterns(g: str, k: int) -> List[List[str]]:
    """g, g², ..., g^k."""
    return [[g] * n for n in range(1, k + 1)]


def orbit_witness(m: Machine, patterns: Sequence[Pattern], x: UltimatelyPeriodicWord, k: Optional[int] = None) -> int:
    """Count pairwise distinct images of a prefix of x under the given generator words.

    The prefix has length 2k+2 (k defaults to the number of patterns). Images
    equal to the prefix itself are not counted, they can't be told apart from
    the identity. The count is a lower bound on the size of the semigroup.
    """
    if k is None:
        k = len(patterns)
    probe = x.prefix(2 * k + 2)
    images = set()
    for pattern in patterns:
        letters = parse_generator_word(pattern, m.states) if isinstance(pattern, str) else pattern
        image = act(m, letters, probe)
        if image != probe:
            images.add(image)
    logging.debug(f"Orbit of {x} under {len(patterns)} patterns: {len(images)} distinct images")
    return len(images)
