import pytest

from src.algebra import enumerate_semigroup
from src.dot import emit_dot
from src.errors import AlgebraError
from tests.machines import IDENTITY, ODOMETER, V12, V20


def count(text, fragment):
    return text.count(fragment)


def test_identity_machine():
    text = emit_dot(IDENTITY)
    assert text.startswith("digraph I {")
    assert count(text, "shape=circle") == 1
    assert 'e -> e [label="0/0"]' in text
    assert 'e -> e [label="1/1"]' in text
    assert count(text, "->") == 2


def test_v12():
    text = emit_dot(V12)
    assert count(text, "shape=circle") == 2
    assert count(text, "->") == 4
    assert 'q0 -> q1 [label="0/1"]' in text
    assert "rankdir=LR" in text


def test_start_marker():
    text = emit_dot(ODOMETER.at("s"))
    assert "__start [label=\"\" shape=point]" in text
    assert "__start -> s" in text
    assert count(text, "->") == 5


def test_output_is_deterministic():
    assert emit_dot(V12) == emit_dot(V12)


def test_klein_four_cayley_graph():
    text = emit_dot(enumerate_semigroup(V20, 100, 10))
    assert count(text, "shape=box") == 4
    assert count(text, "->") == 8
    assert 'e0 [label=p shape=box]' in text
    assert 'e2 [label="p p" shape=box]' in text
    assert 'e0 -> e2 [label=p]' in text


def test_cayley_graph_needs_closed_table():
    with pytest.raises(AlgebraError):
        emit_dot(enumerate_semigroup(ODOMETER, 5, 100))
