from typing import Dict, Iterable, List, Optional, Tuple

from .compose import CascadeMachine
from .errors import DuplicateRow, FormatError, MissingHeader, ParseError, WordError
from .invert import InverseMachine
from .machine import Machine, MachineDescription, Row, validate
from .seqfn import SeqFnOracle
from .words import LAMBDA, Word, format_word, parse_word

HEADERS = ("in", "out", "states", "start")


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as e:
        raise FormatError(f"Failed to read {path}: {e}") from e


def _content_lines(text: str) -> Iterable[Tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _parse_row(number: int, line: str) -> Row:
    left, _, right = line.partition("->")
    source = left.split()
    target, slash, output = right.partition("/")
    target, output = target.split(), output.split()
    if len(source) != 2 or not slash or len(target) != 1 or len(output) != 1:
        raise ParseError(number, f"expected 'state input -> state / output', got '{line}'")
    return source[0], source[1], target[0], output[0]


def parse_machine_text(text: str) -> Tuple[Machine, Optional[str]]:
    """Parse the machine file format; returns the machine and its optional start state."""
    name = None
    headers: Dict[str, List[str]] = {}
    rows: List[Row] = []
    seen = set()
    for number, line in _content_lines(text):
        if "->" in line:
            row = _parse_row(number, line)
            if row[:2] in seen:
                raise DuplicateRow(number, row[0], row[1])
            seen.add(row[:2])
            rows.append(row)
        elif line.split()[0] == "machine":
            if name is not None:
                raise ParseError(number, "machine name given twice")
            name = line[len("machine"):].strip()
            if not name:
                raise ParseError(number, "machine name is empty")
        elif ":" in line:
            key, _, value = line.partition(":")
            key = key.strip()
            if key not in HEADERS:
                raise ParseError(number, f"unknown header '{key}'")
            if key in headers:
                raise ParseError(number, f"header '{key}' given twice")
            headers[key] = value.split()
        else:
            raise ParseError(number, f"cannot read '{line}'")

    if name is None:
        raise MissingHeader("machine")
    for key in ("in", "out", "states"):
        if key not in headers:
            raise MissingHeader(key)
    start = None
    if "start" in headers:
        if len(headers["start"]) != 1:
            raise FormatError("Header 'start:' takes exactly one state")
        start = headers["start"][0]

    machine = validate(MachineDescription(name, headers["states"], headers["in"], headers["out"], rows, start))
    return machine, start


def parse_machine_file(path: str) -> Tuple[Machine, Optional[str]]:
    return parse_machine_text(_read(path))


def provenance_comments(m: Machine) -> List[str]:
    if isinstance(m, CascadeMachine):
        lines = [f"cascade: {m.first.name} then {m.second.name}"]
        lines += [f"{q} = {m.second.name}.{second} x {m.first.name}.{first}"
                  for q, (second, first) in m.components.items()]
        return lines
    if isinstance(m, InverseMachine):
        return [f"inverse of {m.source.name}"]
    return []


def emit_machine(m: Machine, start: Optional[str] = None, comments: Iterable[str] = ()) -> str:
    """Normalized machine file text: headers, then rows sorted by state and input."""
    lines = [f"# {comment}" for comment in list(comments) + provenance_comments(m)]
    lines += [
        f"machine {m.name}",
        f"in: {' '.join(m.input_alphabet)}",
        f"out: {' '.join(m.output_alphabet)}",
        f"states: {' '.join(m.states)}",
    ]
    if start is not None:
        lines.append(f"start: {start}")
    lines += [f"{q} {a} -> {target} / {b}" for q, a, target, b in sorted(m.rows())]
    return "\n".join(lines) + "\n"


def write_machine_file(path: str, m: Machine, start: Optional[str] = None) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(emit_machine(m, start))
    except OSError as e:
        raise FormatError(f"Failed to write {path}: {e}") from e


def machine_record(m: Machine, start: Optional[str] = None) -> dict:
    """JSON-ready description of a machine."""
    record = {
        "name": m.name,
        "in": list(m.input_alphabet),
        "out": list(m.output_alphabet),
        "states": list(m.states),
        "transitions": [[q, a, target, b] for q, a, target, b in m.rows()],
    }
    if start is not None:
        record["start"] = start
    return record


def parse_function_table(text: str) -> SeqFnOracle:
    """Parse `alphabet: ...` (and optional `out: ...`) plus lines `u -> v` with |u| = |v|."""
    alphabet = None
    outputs = None
    entries: List[Tuple[int, str, str]] = []
    for number, line in _content_lines(text):
        if "->" in line:
            left, _, right = line.partition("->")
            entries.append((number, left, right))
        elif ":" in line:
            key, _, value = line.partition(":")
            key = key.strip()
            if key == "alphabet":
                alphabet = value.split()
            elif key == "out":
                outputs = value.split()
            else:
                raise ParseError(number, f"unknown header '{key}'")
        else:
            raise ParseError(number, f"cannot read '{line}'")

    if alphabet is None:
        raise MissingHeader("alphabet")
    table: Dict[Word, Word] = {}
    for number, left, right in entries:
        try:
            u, v = parse_word(left, alphabet), parse_word(right, outputs or alphabet)
        except WordError as e:
            raise ParseError(number, str(e)) from e
        if len(u) != len(v):
            raise ParseError(number, f"'{format_word(u, alphabet)}' and '{format_word(v, outputs or alphabet)}' differ in length")
        if u in table:
            raise ParseError(number, f"word '{format_word(u, alphabet)}' is given twice")
        for symbol in u:
            if symbol not in alphabet:
                raise FormatError(f"Symbol {symbol} of '{format_word(u, alphabet)}' is not in the alphabet")
        table[u] = v
    table.setdefault(LAMBDA, LAMBDA)
    return SeqFnOracle.from_table(alphabet, table, outputs, name="table")


def parse_function_file(path: str) -> SeqFnOracle:
    return parse_function_table(_read(path))
