import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra import (Status, alternating_patterns, canonicalize, element, enumerate_semigroup,
                         identity_index, inverse_index, order_of, orbit_witness, power_order, power_patterns,
                         product)
from src.compose import cascade
from src.errors import AlgebraError, AlphabetMismatch, EmptyWord, NotInvertible, UnknownState
from src.invert import invert
from src.machine import Machine
from src.words import parse_periodic_word, words_up_to
from tests.machines import BINARY, FIXTURES, IDENTITY, ODOMETER, SPLIT, V11, V12, V20, brute_equal
from tests.strategies import initial_machines, renamed_copy


def test_cascade_with_inverse_is_identity_element():
    inverse = invert(V12)
    composite = canonicalize(cascade(V12.at("q0"), inverse.at("q0")))
    assert composite == canonicalize(IDENTITY.at("e"))
    assert composite.size == 1


def test_redundant_identity_states_merge():
    three = Machine.identity(BINARY, states=("e0", "e1", "e2"))
    assert canonicalize(three.at("e1")) == canonicalize(IDENTITY.at("e"))


@pytest.mark.parametrize("m", FIXTURES, ids=lambda m: m.name)
def test_canonicalize_is_idempotent(m):
    for q in m.states:
        once = canonicalize(m.at(q))
        assert canonicalize(once.machine) == once
        assert once.machine.machine.states == tuple(str(i) for i in range(once.size))


def test_canonical_form_ignores_state_names():
    copy, names = renamed_copy(SPLIT)
    for q in SPLIT.states:
        assert canonicalize(copy.at(names[q])) == canonicalize(SPLIT.at(q))


def test_canonicalize_drops_unreachable_states():
    assert canonicalize(SPLIT.at("c0")).size == 2
    assert canonicalize(SPLIT.at("d0")).size == 3


@st.composite
def comparable_pairs(draw):
    if draw(st.booleans()):
        first = draw(initial_machines(max_states=3, alphabet=BINARY, name="A"))
        copy, names = renamed_copy(first.machine)
        return first, copy.at(names[first.start])
    first = draw(initial_machines(alphabet=BINARY, name="A"))
    return first, draw(initial_machines(alphabet=BINARY, name="B"))


@settings(max_examples=50, deadline=None)
@given(comparable_pairs())
def test_canonical_equality_is_functional_equality(pair):
    first, second = pair
    depth = len(first.machine.states) * len(second.machine.states)
    assert (canonicalize(first) == canonicalize(second)) == brute_equal(first, second, depth)


def test_element():
    assert element(V20, "p p") == canonicalize(IDENTITY.at("e"))
    assert element(V20, "p q") == element(V20, "q p")
    assert element(V20, "p q") != element(V20, "q")
    assert element(IDENTITY, "e") == canonicalize(IDENTITY.at("e"))
    assert element(V20, "pq").witness == ("p", "q")
    assert element(V12, "q0 q0^-1") == canonicalize(IDENTITY.at("e"))


def test_element_is_a_homomorphism():
    for x, y in [("q0", "q1"), ("q0 q1", "q1^-1"), ("q1 q1", "q0 q1")]:
        assert element(V12, f"{x} {y}") == product(element(V12, x), element(V12, y))


def test_element_acts_left_to_right():
    e = element(ODOMETER, "s s")
    for u in words_up_to(BINARY, 5):
        assert e.machine(u) == ODOMETER.walk("s", ODOMETER.walk("s", u)[1])[1]


def test_element_errors():
    with pytest.raises(EmptyWord):
        element(V20, "")
    with pytest.raises(UnknownState):
        element(V20, ["r"])
    with pytest.raises(NotInvertible):
        element(V11, "1^-1")
    wide = Machine.from_table("wide", {"s": {"0": ("s", "a")}}, ("0",), ("a",))
    with pytest.raises(AlphabetMismatch):
        element(wide, "s")


def test_klein_four():
    result = enumerate_semigroup(V20, 100, 10)
    assert result.status is Status.FINITE
    assert [e.witness for e in result.elements] == [("p",), ("q",), ("p", "p"), ("p", "q")]
    assert result.generators == [("p", 0), ("q", 1)]
    p, q, one, pq = range(4)
    assert result.cayley == [
        [one, pq, p, q],
        [pq, one, q, p],
        [p, q, one, pq],
        [q, p, pq, one],
    ]
    assert identity_index(result) == one
    assert all(inverse_index(result, i) == i for i in range(4))
    assert order_of(result, p) == 2
    assert order_of(result, one) == 1


def test_identity_semigroup():
    result = enumerate_semigroup(IDENTITY, 10, 5)
    assert result.finite
    assert len(result.elements) == 1
    assert result.cayley == [[0]]


def test_duplicate_generators_share_an_element():
    result = enumerate_semigroup(Machine.identity(BINARY, states=("e0", "e1")), 10, 5)
    assert len(result.elements) == 1
    assert result.generators == [("e0", 0), ("e1", 0)]


def test_v11_semigroup_is_infinite():
    # the k-th power of state 0 marks every 2^k-th occurrence of 1
    result = enumerate_semigroup(V11, 20, 6)
    assert result.status is Status.LOWER_BOUND_ONLY
    assert power_order(element(V11, "0"), bound=5) is None


def test_signed_enumeration_of_finite_group():
    result = enumerate_semigroup(V20, 100, 10, signed=True)
    assert result.finite
    assert len(result.elements) == 4
    assert [label for label, _ in result.generators] == ["p", "q", "p^-1", "q^-1"]


def test_signed_enumeration_needs_invertible_machine():
    with pytest.raises(NotInvertible):
        enumerate_semigroup(V11, 10, 5, signed=True)


def test_odometer_group_is_infinite():
    result = enumerate_semigroup(ODOMETER, 50, 100, signed=True)
    assert result.status is Status.LOWER_BOUND_ONLY
    assert len(result.elements) == 50
    assert len(set(result.elements)) == 50
    assert result.cayley is None
    with pytest.raises(AlgebraError):
        order_of(result, 0)


def test_length_bound_trips():
    result = enumerate_semigroup(ODOMETER, 1000, 4)
    assert result.status is Status.LOWER_BOUND_ONLY
    assert max(len(e.witness) for e in result.elements) == 4


def test_elements_ordered_by_witness():
    result = enumerate_semigroup(ODOMETER, 30, 100, signed=True)
    lengths = [len(e.witness) for e in result.elements]
    assert lengths == sorted(lengths)


def test_power_order():
    assert power_order(element(V20, "p")) == 2
    assert power_order(element(IDENTITY, "e")) == 1
    assert power_order(element(ODOMETER, "s"), bound=20) is None


def test_orbit_witness():
    x = parse_periodic_word(":01")
    assert orbit_witness(V20, ["p", "q", "p q", "p p"], x) == 3
    assert orbit_witness(ODOMETER, power_patterns("s", 8), parse_periodic_word(":0")) == 8


def test_orbit_witness_is_a_lower_bound():
    x = parse_periodic_word(":01")
    result = enumerate_semigroup(V20, 100, 10)
    assert orbit_witness(V20, alternating_patterns("p", "q", 6), x, 6) <= len(result.elements)


def test_patterns():
    assert alternating_patterns("p", "q", 3) == [["p"], ["p", "q"], ["p", "q", "p"]]
    assert power_patterns("s", 2) == [["s"], ["s", "s"]]


def test_cayley_needs_closed_table():
    result = enumerate_semigroup(ODOMETER, 5, 100)
    with pytest.raises(AlgebraError):
        identity_index(result)


def test_element_text():
    e = element(V20, "p q")
    assert e.label() == "p q"
    assert str(e) == "p q [2 states]"
