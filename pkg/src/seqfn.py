import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .defaults import DEFAULT_MAX_STATES
from .errors import BudgetExceeded, OracleError, TableNotClosed, TableTooShort, UndefinedProbe
from .machine import InitialMachine, MachineDescription, validate
from .verdict import Verdict
from .words import LAMBDA, Word, format_word, is_prefix, words_up_to


@dataclass(frozen=True)
class SeqFnOracle:
    """A function A* → B* known only through evaluation."""
    alphabet: Tuple[str, ...]
    evaluator: Callable[[Word], Sequence[str]]
    output_alphabet: Optional[Tuple[str, ...]] = None
    name: str = "f"
    # longest input the oracle answers, None when unbounded
    max_length: Optional[int] = None

    def __call__(self, u: Sequence[str]) -> Word:
        return Word(self.evaluator(Word(u)))

    @classmethod
    def from_machine(cls, im: InitialMachine) -> 'SeqFnOracle':
        return cls(im.machine.input_alphabet, im, im.machine.output_alphabet, f"{im.name}@{im.start}")

    @classmethod
    def from_table(cls, alphabet: Sequence[str], table: Mapping[Word, Word],
                   output_alphabet: Optional[Sequence[str]] = None, name: str = "table") -> 'SeqFnOracle':
        table = {Word(u): Word(v) for u, v in table.items()}

        def lookup(u: Word) -> Word:
            try:
                return table[u]
            except KeyError:
                raise UndefinedProbe(format_word(u, alphabet)) from None

        longest = max((len(u) for u in table), default=0)
        return cls(tuple(alphabet), lookup, tuple(output_alphabet) if output_alphabet else None, name, longest)

    @classmethod
    def identity(cls, alphabet: Sequence[str]) -> 'SeqFnOracle':
        return cls(tuple(alphabet), lambda u: u, tuple(alphabet), "id")

    @classmethod
    def reverse(cls, alphabet: Sequence[str]) -> 'SeqFnOracle':
        """Word reversal: length preserving but not prefix preserving."""
        return cls(tuple(alphabet), lambda u: u[::-1], tuple(alphabet), "reverse")


@dataclass
class QuotientTable:
    """Quotients f_u found by breadth-first exploration, compared at a probe depth."""
    depth: int
    alphabet: Tuple[str, ...]
    representatives: List[Word] = field(default_factory=list)
    # (representative index, letter) -> representative index of f_{ua}
    transitions: Dict[Tuple[int, str], int] = field(default_factory=dict)
    # (representative index, letter) -> f_u(a)
    outputs: Dict[Tuple[int, str], str] = field(default_factory=dict)
    closed: bool = False
    # weakest probe depth any two quotients were compared at
    resolution: Optional[int] = None


def _memoized(f: SeqFnOracle) -> Callable[[Word], Word]:
    cache: Dict[Word, Word] = {}

    def evaluate(u: Word) -> Word:
        if u not in cache:
            cache[u] = f(u)
        return cache[u]

    return evaluate


def check_sequential(f: SeqFnOracle, d: int) -> Verdict:
    """Check |f(u)| = |u| and prefix preservation on all words up to length d."""
    images: Dict[Word, Word] = {}
    for v in words_up_to(f.alphabet, d):
        image = f(v)
        if len(image) != len(v):
            return Verdict.fails((v,), f"|f({v})| = {len(image)}, expected {len(v)}")
        if v:
            parent = v[:-1]
            if not is_prefix(images[parent], image):
                return Verdict.fails((parent, v), f"f({parent}) = {images[parent]} is not a prefix of f({v}) = {image}")
        images[v] = image
    return Verdict.ok(f"sequential at resolution {d}")


def quotient(f: SeqFnOracle, u: Sequence[str]) -> SeqFnOracle:
    """f_u(v) = the last |v| symbols of f(uv)."""
    u = Word(u)
    return SeqFnOracle(
        f.alphabet,
        lambda v: f(u + v)[len(u):],
        f.output_alphabet,
        f"{f.name}_{u}",
        None if f.max_length is None else f.max_length - len(u),
    )


def explore_quotients(f: SeqFnOracle, d: int, max_states: int = DEFAULT_MAX_STATES) -> QuotientTable:
    """Breadth-first search over quotients f_u, starting from f_λ.

    Two quotients are identified when they agree on every probe word of
    length <= d. An oracle with a longest input (a function table) is probed
    only where it is defined, so f_ua is compared on words of length at most
    min(d, max_length - |ua|); the weakest such depth lands in
    `resolution`. Raises TableTooShort when some ua can't be compared on
    even one letter, and BudgetExceeded with the partial table when more
    than max_states distinct quotients show up.
    """
    if d < 1 or max_states < 1:
        raise OracleError(f"Exploration needs depth >= 1 and max_states >= 1, got {d} and {max_states}")
    evaluate = _memoized(f)
    probes = list(words_up_to(f.alphabet, d))
    limit = f.max_length

    def signature(u: Word) -> Tuple[Word, ...]:
        return tuple(evaluate(u + w)[len(u):] for w in probes)

    def agree(r: Word, u: Word, depth: int) -> bool:
        return all(evaluate(r + w)[len(r):] == evaluate(u + w)[len(u):] for w in probes if len(w) <= depth)

    table = QuotientTable(depth=d, alphabet=f.alphabet, representatives=[LAMBDA], resolution=d)
    index = {signature(LAMBDA): 0} if limit is None else {}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        u = table.representatives[i]
        for a in f.alphabet:
            ua = u + Word((a,))
            depth = d if limit is None else min(d, limit - len(ua))
            if depth < 1:
                raise TableTooShort(limit, format_word(ua, f.alphabet), len(ua) + 1)
            image = evaluate(ua)
            if len(image) != len(ua):
                raise OracleError(f"Function is not length preserving on '{format_word(ua, f.alphabet)}'")
            table.outputs[(i, a)] = image[len(u)]
            if limit is None:
                key = signature(ua)
                j = index.get(key)
            else:
                table.resolution = min(table.resolution, depth)
                j = next((k for k, r in enumerate(table.representatives) if agree(r, ua, depth)), None)
            if j is None:
                if len(table.representatives) >= max_states:
                    logging.info(f"Quotient exploration of {f.name} stopped at {max_states} states")
                    raise BudgetExceeded(table)
                j = len(table.representatives)
                table.representatives.append(ua)
                if limit is None:
                    index[key] = j
                queue.append(j)
            table.transitions[(i, a)] = j
    table.closed = True
    if table.resolution < d:
        logging.warning(f"{f.name} is defined up to length {limit}, quotients compared at resolution {table.resolution} instead of {d}")
    logging.debug(f"{f.name} has {len(table.representatives)} quotients at resolution {table.resolution}")
    return table


def synthesize(t: QuotientTable, f: SeqFnOracle) -> InitialMachine:
    """Build the initial machine whose states are the quotient classes of t."""
    if not t.closed:
        raise TableNotClosed()
    names = [str(u) for u in t.representatives]
    rows = [
        (names[i], a, names[t.transitions[(i, a)]], t.outputs[(i, a)])
        for i in range(len(names))
        for a in t.alphabet
    ]
    outputs = list(f.output_alphabet) if f.output_alphabet else sorted(set(t.outputs.values()))
    machine = validate(MachineDescription(f"synth({f.name})", names, list(t.alphabet), outputs, rows, names[0]))
    return InitialMachine(machine, names[0])


def check_endomorphism(f: SeqFnOracle, p: int, d: int) -> Verdict:
    """Check that f fixes the root and maps every arc (u, ua), |u| < d, to an arc."""
    if len(f.alphabet) != p:
        raise OracleError(f"Oracle alphabet has {len(f.alphabet)} letters, expected {p}")
    images: Dict[Word, Word] = {LAMBDA: f(LAMBDA)}
    if images[LAMBDA]:
        return Verdict.fails((LAMBDA,), f"root is sent to {images[LAMBDA]}")
    for u in words_up_to(f.alphabet, d - 1):
        for a in f.alphabet:
            ua = u + Word((a,))
            image = f(ua)
            if len(image) != len(images[u]) + 1 or not is_prefix(images[u], image):
                return Verdict.fails((u, ua), f"arc ({u}, {ua}) is sent to ({images[u]}, {image})")
            images[ua] = image
    return Verdict.ok(f"tree endomorphism at resolution {d}")
