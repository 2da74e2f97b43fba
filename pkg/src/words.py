from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence
from .errors import WordError

EMPTY_WORD_TEXT = "λ"


class Word(tuple):
    """A finite word over opaque symbol tokens.

    Slicing, concatenation and repetition stay inside the type, so a word
    never silently turns into a plain tuple.
    """

    def __new__(cls, symbols: Iterable[str] = ()):
        return super().__new__(cls, symbols)

    def __add__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        return Word(tuple.__add__(self, other))

    def __mul__(self, times: int):
        return Word(tuple.__mul__(self, times))

    def __getitem__(self, index):
        result = tuple.__getitem__(self, index)
        if isinstance(index, slice):
            return Word(result)
        return result

    def __str__(self):
        return format_word(self) or EMPTY_WORD_TEXT

    def __repr__(self):
        return f"Word({str(self)!r})"


LAMBDA = Word()


@dataclass(frozen=True)
class UltimatelyPeriodicWord:
    """The infinite word u·v^ω."""
    anti_period: Word
    period: Word

    def __post_init__(self):
        object.__setattr__(self, "anti_period", Word(self.anti_period))
        object.__setattr__(self, "period", Word(self.period))
        if not self.period:
            raise WordError("Period of an ultimately periodic word must not be empty")

    def prefix(self, n: int) -> Word:
        if n < 0:
            raise WordError(f"Prefix length must be non-negative, got {n}")
        u, v = self.anti_period, self.period
        if n <= len(u):
            return u[:n]
        rest = n - len(u)
        repeats = -(-rest // len(v))
        return u + (v * repeats)[:rest]

    def __str__(self):
        return f"{format_word(self.anti_period)}:{format_word(self.period)}"


def prefix(x: UltimatelyPeriodicWord, n: int) -> Word:
    """First n symbols of x."""
    return x.prefix(n)


def is_prefix(u: Sequence[str], w: Sequence[str]) -> bool:
    return len(u) <= len(w) and tuple(w[:len(u)]) == tuple(u)


def _dotted(symbols: Iterable[str]) -> bool:
    return any(len(symbol) != 1 for symbol in symbols)


def format_word(word: Sequence[str], alphabet: Optional[Sequence[str]] = None) -> str:
    """Render a word; symbols are joined with '.' unless all of the alphabet's are single characters.

    Without an alphabet, the word's own symbols decide.
    """
    if _dotted(word if alphabet is None else alphabet):
        return ".".join(word)
    return "".join(word)


def parse_word(text: str, alphabet: Optional[Sequence[str]] = None) -> Word:
    """Read a word; dotted text, or any text over an alphabet with a multi-character symbol, splits on '.'."""
    text = text.strip()
    if text in ("", EMPTY_WORD_TEXT):
        return LAMBDA
    if "." in text or (alphabet is not None and _dotted(alphabet)):
        symbols = text.split(".")
        if any(not symbol for symbol in symbols):
            raise WordError(f"Empty symbol in word '{text}'")
        return Word(symbols)
    return Word(text)


def parse_periodic_word(text: str, alphabet: Optional[Sequence[str]] = None) -> UltimatelyPeriodicWord:
    """Parse `u:v`, meaning u·v^ω."""
    if text.count(":") != 1:
        raise WordError(f"Expected 'u:v' for an ultimately periodic word, got '{text}'")
    anti_period, period = text.split(":")
    return UltimatelyPeriodicWord(parse_word(anti_period, alphabet), parse_word(period, alphabet))


def words_of_length(alphabet: Sequence[str], n: int) -> Iterator[Word]:
    for symbols in product(alphabet, repeat=n):
        yield Word(symbols)


def words_up_to(alphabet: Sequence[str], n: int) -> Iterator[Word]:
    """All words of length <= n, shortest first, then in alphabet order."""
    for length in range(n + 1):
        yield from words_of_length(alphabet, length)
