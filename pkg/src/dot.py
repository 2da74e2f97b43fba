from typing import Optional, Union

import graphviz

from .algebra import SemigroupResult
from .errors import AlgebraError
from .machine import InitialMachine, Machine

START_NODE = "__start"


def machine_dot(m: Machine, start: Optional[str] = None) -> graphviz.Digraph:
    """One node per state, one `a/b` arc per (state, input) pair."""
    dot = graphviz.Digraph(name=m.name)
    dot.graph_attr["rankdir"] = "LR"
    if start is not None:
        dot.node(START_NODE, label="", shape="point")
    for q in m.states:
        dot.node(q, shape="circle")
    if start is not None:
        dot.edge(START_NODE, start)
    for q, a, target, b in m.rows():
        dot.edge(q, target, label=f"{a}/{b}")
    return dot


def cayley_dot(result: SemigroupResult) -> graphviz.Digraph:
    """Cayley graph for left multiplication: e → g·e, labeled by the generator g."""
    if result.cayley is None:
        raise AlgebraError(f"Semigroup of {result.machine_name} has no closed product table")
    dot = graphviz.Digraph(name=f"cayley_{result.machine_name}")
    for i, e in enumerate(result.elements):
        dot.node(f"e{i}", label=e.label(), shape="box")
    for i in range(len(result.elements)):
        for label, g in result.generators:
            dot.edge(f"e{i}", f"e{result.cayley[g][i]}", label=label)
    return dot


def emit_dot(subject: Union[Machine, InitialMachine, SemigroupResult]) -> str:
    if isinstance(subject, SemigroupResult):
        return cayley_dot(subject).source
    if isinstance(subject, InitialMachine):
        return machine_dot(subject.machine, subject.start).source
    return machine_dot(subject).source
