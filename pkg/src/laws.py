"""Executable invariants of machines, run by the `check` verb and the tests."""
from typing import List, Optional, Tuple

from .compose import cascade
from .defaults import DEFAULT_CHECK_DEPTH
from .invert import invert, is_invertible
from .machine import Machine
from .seqfn import SeqFnOracle, quotient
from .verdict import Verdict
from .words import is_prefix, words_of_length, words_up_to


def action_laws(m: Machine, depth: int = DEFAULT_CHECK_DEPTH) -> Verdict:
    """q∘(uv) = (q∘u)∘v and q*(uv) = (q*u)·((q∘u)*v) for |uv| <= depth."""
    for q in m.states:
        for w in words_up_to(m.input_alphabet, depth):
            whole_state, whole_output = m.walk(q, w)
            for i in range(len(w) + 1):
                u, v = w[:i], w[i:]
                middle, first_output = m.walk(q, u)
                end, second_output = m.walk(middle, v)
                if end != whole_state:
                    return Verdict.fails((q, u, v), f"{q}∘({u}{v}) = {whole_state} but ({q}∘{u})∘{v} = {end}")
                if first_output + second_output != whole_output:
                    return Verdict.fails((q, u, v), f"{q}*({u}{v}) = {whole_output} but splits to {first_output}·{second_output}")
    return Verdict.ok(f"on words up to length {depth}")


def length_preservation(m: Machine, depth: int = DEFAULT_CHECK_DEPTH) -> Verdict:
    for q in m.states:
        for u in words_up_to(m.input_alphabet, depth):
            if len(m.walk(q, u)[1]) != len(u):
                return Verdict.fails((q, u), f"|{q}*{u}| != |{u}|")
    return Verdict.ok(f"on words up to length {depth}")


def prefix_preservation(m: Machine, depth: int = DEFAULT_CHECK_DEPTH) -> Verdict:
    for q in m.states:
        for w in words_of_length(m.input_alphabet, depth):
            image = m.walk(q, w)[1]
            for i in range(len(w)):
                if not is_prefix(m.walk(q, w[:i])[1], image):
                    return Verdict.fails((q, w[:i], w), f"{q}*{w[:i]} is not a prefix of {q}*{w}")
    return Verdict.ok(f"on words up to length {depth}")


def cascade_lemma(first: Machine, second: Machine, depth: int = DEFAULT_CHECK_DEPTH) -> Verdict:
    """(q′,q)∘u = (q′∘(q*u), q∘u) and (q′,q)*u = q′*(q*u) for every product state."""
    product = cascade(first.at(first.states[0]), second.at(second.states[0])).machine
    for label, (q2, q1) in product.components.items():
        for u in words_up_to(first.input_alphabet, depth):
            state, output = product.walk(label, u)
            next1, middle = first.walk(q1, u)
            next2, expected = second.walk(q2, middle)
            if product.components[state] != (next2, next1):
                return Verdict.fails((label, u), f"{label}∘{u} = {state}, expected ({next2},{next1})")
            if output != expected:
                return Verdict.fails((label, u), f"{label}*{u} = {output}, expected {expected}")
    return Verdict.ok(f"on words up to length {depth}")


def inverse_laws(m: Machine, depth: int = DEFAULT_CHECK_DEPTH) -> Verdict:
    """u q q⁻¹ = u q⁻¹ q = u."""
    inverse = invert(m)
    for q in m.states:
        for u in words_up_to(m.input_alphabet, depth):
            there_and_back = inverse.walk(q, m.walk(q, u)[1])[1]
            back_and_there = m.walk(q, inverse.walk(q, u)[1])[1]
            if there_and_back != u or back_and_there != u:
                return Verdict.fails((q, u), f"{q} and {q}^-1 do not cancel on {u}")
    return Verdict.ok(f"on words up to length {depth}")


def level_bijections(m: Machine, depth: int = DEFAULT_CHECK_DEPTH) -> Verdict:
    """Each state permutes every level A^n, n <= depth."""
    for q in m.states:
        for n in range(depth + 1):
            level = list(words_of_length(m.input_alphabet, n))
            images = {m.walk(q, u)[1] for u in level}
            if len(images) != len(level):
                return Verdict.fails((q, n), f"{q} is not injective on words of length {n}")
    return Verdict.ok(f"on levels up to {depth}")


def quotient_identity(m: Machine, depth: int = DEFAULT_CHECK_DEPTH) -> Verdict:
    """f(uv) = f(u)·f_u(v) for f = q̄, |uv| <= depth."""
    for q in m.states:
        f = SeqFnOracle.from_machine(m.at(q))
        for w in words_up_to(m.input_alphabet, depth):
            for i in range(len(w) + 1):
                u, v = w[:i], w[i:]
                if f(w) != f(u) + quotient(f, u)(v):
                    return Verdict.fails((q, u, v), f"f({u}{v}) != f({u})·f_{u}({v}) for f = {q}")
    return Verdict.ok(f"on words up to length {depth}")


def run_suite(m: Machine, depth: int = DEFAULT_CHECK_DEPTH) -> List[Tuple[str, Optional[Verdict]]]:
    """All laws applicable to m; a None verdict marks a law that doesn't apply."""
    square = set(m.output_alphabet) <= set(m.input_alphabet)
    invertible = set(m.output_alphabet) == set(m.input_alphabet) and is_invertible(m)
    return [
        ("action laws", action_laws(m, depth)),
        ("length preservation", length_preservation(m, depth)),
        ("prefix preservation", prefix_preservation(m, depth)),
        ("quotient identity", quotient_identity(m, depth)),
        ("cascade lemma", cascade_lemma(m, m, depth) if square else None),
        ("inverse laws", inverse_laws(m, depth) if invertible else None),
        ("level bijections", level_bijections(m, depth) if invertible else None),
    ]
