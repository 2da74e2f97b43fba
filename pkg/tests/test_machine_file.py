import pytest

from src.compose import cascade
from src.errors import (DuplicateRow, FormatError, MissingHeader, MissingTransition, ParseError, UndefinedProbe,
                        UnknownState)
from src.invert import invert
from src.machine_file import (emit_machine, machine_record, parse_function_table, parse_machine_file,
                              parse_machine_text, write_machine_file)
from src.words import LAMBDA, Word, parse_word
from tests.machines import V12, V12_TEXT, V20


def test_parse_v12():
    machine, start = parse_machine_text(V12_TEXT)
    assert machine == V12
    assert start == "q0"


def test_emit_is_normalized():
    machine, start = parse_machine_text(V12_TEXT)
    text = emit_machine(machine, start)
    assert text == (
        "machine V12\n"
        "in: 0 1\n"
        "out: 0 1\n"
        "states: q0 q1\n"
        "start: q0\n"
        "q0 0 -> q1 / 1\n"
        "q0 1 -> q0 / 0\n"
        "q1 0 -> q1 / 0\n"
        "q1 1 -> q0 / 1\n"
    )
    assert parse_machine_text(text) == (machine, start)
    assert emit_machine(*parse_machine_text(text)) == text


def test_rows_may_come_in_any_order():
    header, rows = V12_TEXT.split("q0 0 -> q1 / 1\n")
    shuffled = header + rows + "q0 0 -> q1 / 1\n"
    assert emit_machine(*parse_machine_text(shuffled)) == emit_machine(*parse_machine_text(V12_TEXT))


def test_duplicate_row():
    with pytest.raises(DuplicateRow) as info:
        parse_machine_text(V12_TEXT + "q0 0 -> q1 / 1\n")
    assert info.value.line == 10
    assert str(info.value).startswith("line 10:")


def test_unknown_start():
    with pytest.raises(UnknownState):
        parse_machine_text(V12_TEXT.replace("start: q0", "start: qX"))


def test_missing_row():
    with pytest.raises(MissingTransition):
        parse_machine_text(V12_TEXT.replace("q1 1 -> q0 / 1\n", ""))


@pytest.mark.parametrize("text, error", [
    (V12_TEXT.replace("in: 0 1\n", ""), MissingHeader),
    (V12_TEXT.replace("machine V12\n", ""), MissingHeader),
    (V12_TEXT.replace("q0 1 -> q0 / 0", "q0 1 -> q0 0"), ParseError),
    (V12_TEXT + "alphabet: 0 1\n", ParseError),
    (V12_TEXT + "states: q2\n", ParseError),
    (V12_TEXT + "what is this\n", ParseError),
])
def test_malformed_files(text, error):
    with pytest.raises(error):
        parse_machine_text(text)


def test_file_round_trip(tmp_path):
    path = str(tmp_path / "v20.mm")
    write_machine_file(path, V20)
    assert parse_machine_file(path) == (V20, None)


def test_missing_file(tmp_path):
    with pytest.raises(FormatError):
        parse_machine_file(str(tmp_path / "nope.mm"))


def test_provenance_comments():
    product = cascade(V12.at("q0"), V20.at("p"))
    text = emit_machine(product.machine, product.start)
    assert text.startswith("# cascade: V12 then V20\n")
    assert "# (p,q1) = V20.p x V12.q1\n" in text
    machine, start = parse_machine_text(text)
    assert start == "(p,q0)"
    assert list(machine.rows()) == list(product.machine.rows())
    assert emit_machine(invert(V12)).startswith("# inverse of V12\n")


def test_machine_record():
    record = machine_record(V12, "q0")
    assert record["states"] == ["q0", "q1"]
    assert record["transitions"][0] == ["q0", "0", "q1", "1"]
    assert record["start"] == "q0"
    assert "start" not in machine_record(V12)


FUNCTION_TABLE = """\
alphabet: 0 1
0 -> 1
1 -> 0
00 -> 11   # complement
"""


def test_parse_function_table():
    f = parse_function_table(FUNCTION_TABLE)
    assert f.alphabet == ("0", "1")
    assert f(LAMBDA) == LAMBDA
    assert f(parse_word("00")) == parse_word("11")
    with pytest.raises(UndefinedProbe):
        f(parse_word("01"))


@pytest.mark.parametrize("text, error", [
    ("0 -> 1\n", MissingHeader),
    ("alphabet: 0 1\n0 -> 11\n", ParseError),
    ("alphabet: 0 1\n0 -> 1\n0 -> 0\n", ParseError),
    ("alphabet: 0 1\n2 -> 1\n", FormatError),
    ("alphabet: 0 1\nsize: 2\n", ParseError),
])
def test_malformed_function_tables(text, error):
    with pytest.raises(error):
        parse_function_table(text)


def test_emitted_rows_are_sorted():
    text = (
        "machine R\n"
        "in: 1 0\n"
        "out: 0 1\n"
        "states: t s\n"
        "t 1 -> s / 0\n"
        "t 0 -> t / 1\n"
        "s 1 -> s / 1\n"
        "s 0 -> t / 0\n"
    )
    machine, start = parse_machine_text(text)
    emitted = emit_machine(machine, start)
    assert emitted.splitlines()[4:] == ["s 0 -> t / 0", "s 1 -> s / 1", "t 0 -> t / 1", "t 1 -> s / 0"]
    assert "states: t s" in emitted
    assert parse_machine_text(emitted) == (machine, start)


def test_function_table_over_multi_character_alphabet():
    f = parse_function_table("alphabet: a0 a1\na1 -> a0\na0 -> a1\na1.a1 -> a0.a1\n")
    assert f(Word(["a1"])) == Word(["a0"])
    assert f(Word(["a1", "a1"])) == Word(["a0", "a1"])
    assert f.max_length == 2
