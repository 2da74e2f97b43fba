from collections import deque
from dataclasses import dataclass
from typing import Dict, Hashable, Iterator, List, Tuple

import networkx as nx

from .defaults import MAX_COUNT
from .errors import LevelCountOverflow, MultipleRoots, NotATree, NotRegular, TreeError
from .words import LAMBDA, Word, words_of_length, words_up_to


def tree_alphabet(p: int) -> Tuple[str, ...]:
    return tuple(str(i) for i in range(p))


def level_count(p: int, n: int) -> int:
    """Number of vertices at level n of the p-regular rooted tree, pⁿ."""
    if p < 1 or n < 0:
        raise TreeError(f"Level count needs p >= 1 and n >= 0, got p={p}, n={n}")
    if p > 1 and n * (p.bit_length() - 1) >= MAX_COUNT.bit_length():
        raise LevelCountOverflow(p, n)
    count = p ** n
    if count > MAX_COUNT:
        raise LevelCountOverflow(p, n)
    return count


@dataclass(frozen=True)
class RegularTreeModel:
    """The p-regular rooted tree over {0..p-1}, cut at a depth bound.

    Vertices are words, the root is λ, arcs are (u, ua). Nothing below the
    depth bound is ever built.
    """
    arity: int
    depth: int

    def __post_init__(self):
        if self.arity < 1 or self.depth < 0:
            raise TreeError(f"Tree needs arity >= 1 and depth >= 0, got {self.arity}, {self.depth}")

    @property
    def alphabet(self) -> Tuple[str, ...]:
        return tree_alphabet(self.arity)

    def level(self, n: int) -> List[Word]:
        if not 0 <= n <= self.depth:
            raise TreeError(f"Level {n} is outside 0..{self.depth}")
        return list(words_of_length(self.alphabet, n))

    def vertices(self) -> Iterator[Word]:
        return words_up_to(self.alphabet, self.depth)

    def arcs(self) -> Iterator[Tuple[Word, Word]]:
        for u in words_up_to(self.alphabet, self.depth - 1):
            for a in self.alphabet:
                yield u, u + Word((a,))

    def to_digraph(self) -> nx.DiGraph:
        tree = nx.DiGraph()
        tree.add_nodes_from(self.vertices())
        tree.add_edges_from(self.arcs())
        return tree


def _ordered(vertices) -> List[Hashable]:
    vertices = list(vertices)
    try:
        return sorted(vertices)
    except TypeError:
        return sorted(vertices, key=repr)


def canonical_tree_labeling(tree: nx.DiGraph, p: int, d: int) -> Dict[Hashable, Word]:
    """Label a rooted out-p-regular tree of depth d by words over {0..p-1}.

    The root gets λ and the children of a vertex labeled u get u0, u1, ...
    in sorted vertex order.
    """
    roots = [v for v, degree in tree.in_degree() if degree == 0]
    if len(roots) != 1:
        raise MultipleRoots(roots)
    symbols = tree_alphabet(p)
    labels: Dict[Hashable, Word] = {roots[0]: LAMBDA}
    queue = deque([roots[0]])
    while queue:
        v = queue.popleft()
        u = labels[v]
        children = _ordered(tree.successors(v))
        expected = p if len(u) < d else 0
        if len(children) != expected:
            raise NotRegular(v, len(children))
        for symbol, child in zip(symbols, children):
            if child in labels:
                raise NotATree(child)
            labels[child] = u + Word((symbol,))
            queue.append(child)
    for v in tree.nodes:
        if v not in labels:
            raise NotATree(v)
    return labels


def is_tree_isomorphism(tree: nx.DiGraph, labeling: Dict[Hashable, Word], p: int, d: int) -> bool:
    """Check that labeling is a bijection onto words of length <= d sending arcs to arcs both ways."""
    model = RegularTreeModel(p, d)
    if set(labeling) != set(tree.nodes):
        return False
    if sorted(labeling.values()) != sorted(model.vertices()):
        return False
    for v, w in tree.edges:
        u, uw = labeling[v], labeling[w]
        if len(uw) != len(u) + 1 or uw[:-1] != u:
            return False
    # injective on arcs, so equal counts means every model arc is hit
    return tree.number_of_edges() == sum(1 for _ in model.arcs())
