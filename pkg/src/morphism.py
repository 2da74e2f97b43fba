import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Generic, List, Mapping, Optional, Sequence, Tuple, TypeVar

from .defaults import DEFAULT_HOM_BUDGET, DEFAULT_SIM_DEPTH
from .errors import MorphismError, PartialTriple, SearchSpaceTooLarge
from .machine import Machine
from .verdict import Verdict
from .words import Word, words_of_length, words_up_to


def _format_map(name: str, mapping: Mapping[str, str]) -> str:
    return f"{name}: " + " ".join(f"{k}->{v}" for k, v in mapping.items())


@dataclass(frozen=True)
class MorphismTriple:
    """Maps of states, inputs and outputs: μ = (μ₁, μ₂, μ₃)."""
    mu1: Mapping[str, str]
    mu2: Mapping[str, str]
    mu3: Mapping[str, str]

    @classmethod
    def identity(cls, m: Machine) -> 'MorphismTriple':
        return cls({q: q for q in m.states}, {a: a for a in m.input_alphabet}, {b: b for b in m.output_alphabet})

    def then(self, other: 'MorphismTriple') -> 'MorphismTriple':
        """Componentwise composition: apply self, then other."""
        return MorphismTriple(
            {q: other.mu1[x] for q, x in self.mu1.items()},
            {a: other.mu2[x] for a, x in self.mu2.items()},
            {b: other.mu3[x] for b, x in self.mu3.items()},
        )

    def __str__(self):
        return "\n".join((_format_map("mu1", self.mu1), _format_map("mu2", self.mu2), _format_map("mu3", self.mu3)))


@dataclass(frozen=True)
class SimulationTriple:
    """h₁: Q → Q′, h₂: A → A′ and h₃: B′ → B with q*u = h₃(h₁(q) *′ h₂(u))."""
    h1: Mapping[str, str]
    h2: Mapping[str, str]
    h3: Mapping[str, str]

    @classmethod
    def identity(cls, m: Machine) -> 'SimulationTriple':
        return cls({q: q for q in m.states}, {a: a for a in m.input_alphabet}, {b: b for b in m.output_alphabet})

    def __str__(self):
        return "\n".join((_format_map("h1", self.h1), _format_map("h2", self.h2), _format_map("h3", self.h3)))


@dataclass(frozen=True)
class Refutation:
    """A rejected candidate and the concrete (state, word) that refutes it."""
    candidate: str
    state: str
    word: Word
    reason: str


T = TypeVar("T")


@dataclass
class SearchOutcome(Generic[T]):
    triple: Optional[T]
    refuted: int
    refutations: List[Refutation] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.triple is not None


def _check_total(name: str, mapping: Mapping[str, str], domain: Sequence[str]) -> None:
    for x in domain:
        if x not in mapping:
            raise PartialTriple(name, x)


def verify_homomorphism(src: Machine, dst: Machine, t: MorphismTriple) -> Verdict:
    """Check μ₁(q∘a) = μ₁(q)∘′μ₂(a) and μ₃(q*a) = μ₁(q)*′μ₂(a) for all (q, a)."""
    _check_total("mu1", t.mu1, src.states)
    _check_total("mu2", t.mu2, src.input_alphabet)
    _check_total("mu3", t.mu3, src.output_alphabet)
    for q, a, target, b in src.rows():
        image_target, image_output = dst.step(t.mu1[q], t.mu2[a])
        if t.mu1[target] != image_target:
            return Verdict.fails((q, a), f"mu1({q}∘{a}) = {t.mu1[target]} but mu1({q})∘mu2({a}) = {image_target}")
        if t.mu3[b] != image_output:
            return Verdict.fails((q, a), f"mu3({q}*{a}) = {t.mu3[b]} but mu1({q})*mu2({a}) = {image_output}")
    return Verdict.ok()


def _lex_rank(mapping: Mapping[str, str], domain: Sequence[str], codomain: Sequence[str]) -> int:
    """Position of a total map in the lexicographic order of all maps domain -> codomain."""
    rank = 0
    for x in domain:
        rank = rank * len(codomain) + codomain.index(mapping[x])
    return rank


def _complete(forced: Dict[str, str], domain: Sequence[str], codomain: Sequence[str]) -> Dict[str, str]:
    """Least total map extending the forced values."""
    return {x: forced.get(x, codomain[0]) for x in domain}


def _shares_sorts(src: Machine, dst: Machine) -> bool:
    return (set(src.states) <= set(dst.states)
            and set(src.input_alphabet) <= set(dst.input_alphabet)
            and set(src.output_alphabet) <= set(dst.output_alphabet))


def _search_size(*spaces: Tuple[int, int]) -> int:
    total = 1
    for codomain, domain in spaces:
        total *= codomain ** domain
    return total


def find_homomorphism(src: Machine, dst: Machine, budget: int = DEFAULT_HOM_BUDGET,
                      keep_log: bool = False) -> SearchOutcome[MorphismTriple]:
    """Exhaustive search for a homomorphism src -> dst.

    Candidates run in lexicographic order of (μ₁, μ₂, μ₃) images, with the
    identity tried first when the sorts allow it. μ₃ is read off the output
    equations, so the first accepted triple is the lexicographically least
    one.
    """
    total = _search_size((len(dst.states), len(src.states)),
                         (len(dst.input_alphabet), len(src.input_alphabet)),
                         (len(dst.output_alphabet), len(src.output_alphabet)))
    if total > budget:
        raise SearchSpaceTooLarge(total, budget)

    if _shares_sorts(src, dst):
        seed = MorphismTriple.identity(src)
        if verify_homomorphism(src, dst, seed):
            return SearchOutcome(seed, 0)

    mu3_space = len(dst.output_alphabet) ** len(src.output_alphabet)
    refuted = 0
    refutations: List[Refutation] = []

    def reject(candidate: str, q: str, a: str, reason: str) -> None:
        nonlocal refuted
        refuted += mu3_space
        logging.debug(f"Refuted {candidate} at ({q}, {a}): {reason}")
        if keep_log:
            refutations.append(Refutation(candidate, q, Word((a,)), reason))

    for images1 in product(dst.states, repeat=len(src.states)):
        mu1 = dict(zip(src.states, images1))
        for images2 in product(dst.input_alphabet, repeat=len(src.input_alphabet)):
            mu2 = dict(zip(src.input_alphabet, images2))
            candidate = f"{_format_map('mu1', mu1)}; {_format_map('mu2', mu2)}"
            forced: Dict[str, str] = {}
            failure = None
            for q, a, target, b in src.rows():
                image_target, image_output = dst.step(mu1[q], mu2[a])
                if mu1[target] != image_target:
                    failure = (q, a, f"transition goes to {image_target}, expected {mu1[target]}")
                    break
                if forced.setdefault(b, image_output) != image_output:
                    failure = (q, a, f"output {b} must go to both {forced[b]} and {image_output}")
                    break
            if failure:
                reject(candidate, *failure)
                continue
            mu3 = _complete(forced, src.output_alphabet, dst.output_alphabet)
            refuted += _lex_rank(mu3, src.output_alphabet, dst.output_alphabet)
            logging.info(f"Homomorphism {src.name} -> {dst.name} found after {refuted} refuted candidates")
            return SearchOutcome(MorphismTriple(mu1, mu2, mu3), refuted, refutations)

    logging.info(f"No homomorphism {src.name} -> {dst.name}, {refuted} candidates refuted")
    return SearchOutcome(None, refuted, refutations)


def fixed_point_homomorphism(src: Machine, dst: Machine) -> Optional[MorphismTriple]:
    """The constant homomorphism into a state with q̇∘ȧ = q̇, if dst has one."""
    for q, a, target, b in dst.rows():
        if target == q:
            return MorphismTriple(
                {p: q for p in src.states},
                {x: a for x in src.input_alphabet},
                {y: b for y in src.output_alphabet},
            )
    return None


def _simulation_failure(target: Machine, by: Machine, h1: Mapping[str, str], h2: Mapping[str, str],
                        words: Sequence[Word], forced: Dict[str, str]) -> Optional[Tuple[str, Word, str]]:
    """Collect the h₃ values forced by all (q, u); report the first conflict."""
    for q in target.states:
        for u in words:
            expected = target.walk(q, u)[1]
            produced = by.walk(h1[q], [h2[a] for a in u])[1]
            for b_by, b in zip(produced, expected):
                if forced.setdefault(b_by, b) != b:
                    return q, u, f"h3({b_by}) must be both {forced[b_by]} and {b}"
    return None


def verify_simulation(target: Machine, by: Machine, t: SimulationTriple, depth: int = DEFAULT_SIM_DEPTH) -> Verdict:
    """Check q*u = h₃(h₁(q) *′ h₂(u)) for all states q and words |u| <= depth."""
    _check_total("h1", t.h1, target.states)
    _check_total("h2", t.h2, target.input_alphabet)
    _check_total("h3", t.h3, by.output_alphabet)
    for q in target.states:
        for u in words_up_to(target.input_alphabet, depth):
            expected = target.walk(q, u)[1]
            produced = by.walk(t.h1[q], [t.h2[a] for a in u])[1]
            image = Word(t.h3[b] for b in produced)
            if image != expected:
                return Verdict.fails((q, u), f"{q}*{u} = {expected} but h3(h1({q})*h2({u})) = {image}")
    return Verdict.ok(f"simulation at resolution {depth}")


def find_simulation(target: Machine, by: Machine, depth: int = DEFAULT_SIM_DEPTH,
                    budget: int = DEFAULT_HOM_BUDGET, keep_log: bool = False) -> SearchOutcome[SimulationTriple]:
    """Exhaustive search for maps letting `by` simulate `target`, verified on words up to depth."""
    if depth < 1:
        raise MorphismError(f"Simulation depth must be at least 1, got {depth}")
    total = _search_size((len(by.states), len(target.states)),
                         (len(by.input_alphabet), len(target.input_alphabet)),
                         (len(target.output_alphabet), len(by.output_alphabet)))
    if total > budget:
        raise SearchSpaceTooLarge(total, budget)

    if _shares_sorts(target, by) and set(by.output_alphabet) <= set(target.output_alphabet):
        seed = SimulationTriple({q: q for q in target.states}, {a: a for a in target.input_alphabet},
                                {b: b for b in by.output_alphabet})
        if verify_simulation(target, by, seed, depth):
            return SearchOutcome(seed, 0)

    # every shorter word is a prefix of one of these, and outputs respect prefixes
    words = list(words_of_length(target.input_alphabet, depth))
    h3_space = len(target.output_alphabet) ** len(by.output_alphabet)
    refuted = 0
    refutations: List[Refutation] = []
    for images1 in product(by.states, repeat=len(target.states)):
        h1 = dict(zip(target.states, images1))
        for images2 in product(by.input_alphabet, repeat=len(target.input_alphabet)):
            h2 = dict(zip(target.input_alphabet, images2))
            forced: Dict[str, str] = {}
            failure = _simulation_failure(target, by, h1, h2, words, forced)
            if failure:
                refuted += h3_space
                candidate = f"{_format_map('h1', h1)}; {_format_map('h2', h2)}"
                logging.debug(f"Refuted {candidate} at ({failure[0]}, {failure[1]}): {failure[2]}")
                if keep_log:
                    refutations.append(Refutation(candidate, *failure))
                continue
            h3 = _complete(forced, by.output_alphabet, target.output_alphabet)
            refuted += _lex_rank(h3, by.output_alphabet, target.output_alphabet)
            logging.info(f"{by.name} simulates {target.name}, {refuted} candidates refuted first")
            return SearchOutcome(SimulationTriple(h1, h2, h3), refuted, refutations)

    logging.info(f"{by.name} does not simulate {target.name} at resolution {depth}, {refuted} candidates refuted")
    return SearchOutcome(None, refuted, refutations)
