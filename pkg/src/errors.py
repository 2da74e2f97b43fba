class MealyError(Exception):
    """Base class for all machine toolkit errors."""
    pass

class WordError(MealyError):
    """Raised when there's an issue with finite or ultimately periodic words."""
    pass

class MachineError(MealyError):
    """Raised when a machine description violates the machine invariants."""
    pass

class AlphabetError(MealyError):
    """Raised when alphabets of machines or maps don't fit together."""
    pass

class InversionError(MealyError):
    """Raised when there's an issue with inverting a machine."""
    pass

class OracleError(MealyError):
    """Raised when there's an issue with sequential function oracles."""
    pass

class TreeError(MealyError):
    """Raised when there's an issue with regular rooted trees."""
    pass

class AlgebraError(MealyError):
    """Raised when there's an issue with semigroup elements."""
    pass

class MorphismError(MealyError):
    """Raised when there's an issue with homomorphism or simulation search."""
    pass

class FormatError(MealyError):
    """Raised when there's an issue reading or writing machine files."""
    pass

class UsageError(MealyError):
    """Raised when a command line is malformed."""
    pass

class MissingTransition(MachineError):
    def __init__(self, state: str, symbol: str):
        self.state = state
        self.symbol = symbol
        super().__init__(f"Missing transition for state {state} on input {symbol}")

class DuplicateTransition(MachineError):
    def __init__(self, state: str, symbol: str):
        self.state = state
        self.symbol = symbol
        super().__init__(f"Transition for state {state} on input {symbol} is given twice")

class UnknownState(MachineError):
    def __init__(self, state: str):
        self.state = state
        super().__init__(f"Unknown state: {state}")

class UnknownSymbol(AlphabetError):
    def __init__(self, symbol: str):
        self.symbol = symbol
        super().__init__(f"Unknown symbol: {symbol}")

class EmptyAlphabet(AlphabetError):
    def __init__(self, which: str):
        self.which = which
        super().__init__(f"The {which} alphabet is empty")

class AlphabetMismatch(AlphabetError):
    def __init__(self, detail: str):
        super().__init__(f"Alphabet mismatch: {detail}")

class NotABijection(AlphabetError):
    def __init__(self, detail: str):
        super().__init__(f"Not a bijection: {detail}")

class NotInvertible(InversionError):
    """Raised when some state's letter map is not a permutation."""
    def __init__(self, state: str):
        self.state = state
        super().__init__(f"state {state}: letter map not a bijection")

class UndefinedProbe(OracleError):
    def __init__(self, word: str):
        self.word = word
        super().__init__(f"Function is not defined on probe word '{word}'")

class TableNotClosed(OracleError):
    def __init__(self):
        super().__init__("Quotient table is not closed, exploration stopped on its state budget")

class BudgetExceeded(OracleError):
    """Raised when quotient exploration runs out of states; carries the partial table."""
    def __init__(self, table):
        self.table = table
        super().__init__(f"Quotient exploration exceeded {len(table.representatives)} states, verdict not determined")

class TableTooShort(OracleError):
    """Raised when a function table is too short to compare quotients on even one letter."""
    def __init__(self, available: int, word: str, needed: int):
        self.available = available
        self.needed = needed
        super().__init__(f"Function table stops at length {available}, exploring '{word}' needs entries up to length {needed}")

class LevelCountOverflow(TreeError):
    def __init__(self, p: int, n: int):
        super().__init__(f"Level count {p}^{n} is beyond the count range")

class NotRegular(TreeError):
    def __init__(self, vertex, outdegree: int):
        self.vertex = vertex
        self.outdegree = outdegree
        super().__init__(f"Vertex {vertex!r} has outdegree {outdegree}")

class MultipleRoots(TreeError):
    def __init__(self, roots):
        self.roots = roots
        super().__init__(f"Expected exactly one root, found {len(roots)}")

class NotATree(TreeError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"Vertex {vertex!r} is reachable along more than one path")

class EmptyWord(AlgebraError):
    def __init__(self):
        super().__init__("Generator word must not be empty")

class SearchSpaceTooLarge(MorphismError):
    def __init__(self, candidates: int, budget: int):
        self.candidates = candidates
        self.budget = budget
        super().__init__(f"Search space has {candidates} candidates, budget is {budget}")

class PartialTriple(MorphismError):
    def __init__(self, sort: str, element: str):
        self.sort = sort
        self.element = element
        super().__init__(f"Map {sort} is not defined on {element}")

class ParseError(FormatError):
    def __init__(self, line: int, detail: str):
        self.line = line
        super().__init__(f"line {line}: {detail}")

class DuplicateRow(ParseError):
    def __init__(self, line: int, state: str, symbol: str):
        super().__init__(line, f"duplicate transition row for state {state} on input {symbol}")

class MissingHeader(FormatError):
    def __init__(self, header: str):
        self.header = header
        super().__init__(f"Missing header '{header}:'")
