import pytest
from hypothesis import given, settings

from src.errors import AlphabetMismatch, NotInvertible, UnknownState, WordError
from src.invert import (InverseMachine, SignedLetter, act, format_generator_word, invert, is_invertible,
                        non_invertible_state, parse_generator_word)
from src.laws import inverse_laws, level_bijections, length_preservation, prefix_preservation
from src.machine import Machine
from src.words import LAMBDA, words_up_to
from tests.machines import BINARY, IDENTITY, ODOMETER, V11, V12, V12_INVERSE, V20
from tests.strategies import invertible_machines


def test_is_invertible():
    assert is_invertible(V12)
    assert is_invertible(V20)
    assert not is_invertible(V11)
    assert non_invertible_state(V11) == "0"


def test_is_invertible_needs_square_alphabets():
    m = Machine.from_table("wide", {"s": {"0": ("s", "a"), "1": ("s", "b")}}, ("0", "1"), ("a", "b"))
    with pytest.raises(AlphabetMismatch):
        is_invertible(m)


def test_invert_v12():
    inverse = invert(V12)
    assert isinstance(inverse, InverseMachine)
    assert inverse.source is V12
    assert list(inverse.rows()) == list(V12_INVERSE.rows())


def test_invert_identity():
    assert list(invert(IDENTITY).rows()) == list(IDENTITY.rows())


def test_double_inverse():
    twice = invert(invert(V12))
    for q in V12.states:
        for u in words_up_to(BINARY, 6):
            assert twice.walk(q, u) == V12.walk(q, u)


def test_not_invertible():
    with pytest.raises(NotInvertible) as info:
        invert(V11)
    assert info.value.state == "0"
    assert str(info.value) == "state 0: letter map not a bijection"


def test_act():
    for u in words_up_to(BINARY, 6):
        assert act(V12, ["q0", "q0^-1"], u) == u
        assert act(V12, ["q0⁻¹", "q0"], u) == u
        assert act(V20, "p p".split(), u) == u
        assert act(ODOMETER, ["s"], u) == ODOMETER.walk("s", u)[1]


def test_act_positive_letters_on_non_invertible_machine():
    u = ("1", "1")
    assert act(V11, ["1", "0"], u) == V11.walk("0", V11.walk("1", u)[1])[1]
    with pytest.raises(NotInvertible):
        act(V11, [SignedLetter("1", True)], u)


def test_act_unknown_state():
    with pytest.raises(UnknownState):
        act(V12, ["q5"], ("0",))


def test_inverse_of_empty_word():
    inverse = invert(V12)
    assert all(inverse.walk(q, LAMBDA)[1] == LAMBDA for q in V12.states)


@pytest.mark.parametrize("m", [V12, V20, ODOMETER, IDENTITY], ids=lambda m: m.name)
def test_inverse_is_a_tree_endomorphism(m):
    inverse = invert(m)
    assert length_preservation(inverse, 5)
    assert prefix_preservation(inverse, 5)
    assert level_bijections(m, 4)


def test_parse_generator_word():
    assert parse_generator_word("q0 q0^-1", V12.states) == [SignedLetter("q0"), SignedLetter("q0", True)]
    assert parse_generator_word("pq", V20.states) == [SignedLetter("p"), SignedLetter("q")]
    assert parse_generator_word("p.q⁻¹", V20.states) == [SignedLetter("p"), SignedLetter("q", True)]
    assert format_generator_word(["q0", SignedLetter("q1", True)]) == "q0 q1^-1"
    with pytest.raises(WordError):
        parse_generator_word("pr", V20.states)


def test_parse_prefers_longest_state_name():
    states = ("a", "ab", "b")
    assert parse_generator_word("abb", states) == [SignedLetter("ab"), SignedLetter("b")]


@settings(max_examples=50, deadline=None)
@given(invertible_machines())
def test_inverse_laws_on_random_machines(m):
    verdict = inverse_laws(m, 4)
    assert verdict, verdict.detail


@settings(max_examples=50, deadline=None)
@given(invertible_machines(max_states=3))
def test_states_permute_levels(m):
    assert level_bijections(m, 4)
