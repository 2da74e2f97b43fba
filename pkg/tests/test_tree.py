import random

import networkx as nx
import pytest

from src.errors import LevelCountOverflow, MultipleRoots, NotATree, NotRegular, TreeError
from src.tree import RegularTreeModel, canonical_tree_labeling, is_tree_isomorphism, level_count
from src.words import LAMBDA, parse_word


@pytest.mark.parametrize("p, n, expected", [(2, 0, 1), (2, 3, 8), (3, 2, 9), (1, 7, 1)])
def test_level_count(p, n, expected):
    assert level_count(p, n) == expected


@pytest.mark.parametrize("p", [2, 3])
def test_level_count_matches_model(p):
    model = RegularTreeModel(p, 6)
    for n in range(7):
        assert level_count(p, n) == len(model.level(n))
    assert sum(1 for _ in model.vertices()) == sum(p ** n for n in range(7))


def test_level_count_errors():
    with pytest.raises(LevelCountOverflow):
        level_count(2, 64)
    with pytest.raises(LevelCountOverflow):
        level_count(10, 19)
    assert level_count(2, 62) == 2 ** 62
    with pytest.raises(TreeError):
        level_count(0, 3)


def test_model_digraph():
    tree = RegularTreeModel(2, 3).to_digraph()
    assert tree.number_of_nodes() == 15
    assert tree.number_of_edges() == 14
    assert nx.is_arborescence(tree)
    assert set(tree.successors(parse_word("01"))) == {parse_word("010"), parse_word("011")}


def test_canonical_tree_labels_itself():
    tree = RegularTreeModel(2, 3).to_digraph()
    labeling = canonical_tree_labeling(tree, 2, 3)
    assert all(v == labeling[v] for v in tree.nodes)
    assert labeling[LAMBDA] == LAMBDA


def shuffled(p, d, seed):
    tree = RegularTreeModel(p, d).to_digraph()
    nodes = list(tree.nodes)
    ids = random.Random(seed).sample(range(len(nodes)), len(nodes))
    return nx.relabel_nodes(tree, dict(zip(nodes, ids)))


def test_shuffled_depth_two_tree():
    tree = shuffled(2, 2, seed=7)
    labeling = canonical_tree_labeling(tree, 2, 2)
    assert sorted(labeling.values()) == sorted(RegularTreeModel(2, 2).vertices())
    for v, w in tree.edges:
        assert labeling[w][:-1] == labeling[v]


@pytest.mark.parametrize("seed", range(20))
def test_random_relabelings_are_isomorphisms(seed):
    tree = shuffled(2, 4, seed)
    labeling = canonical_tree_labeling(tree, 2, 4)
    assert is_tree_isomorphism(tree, labeling, 2, 4)
    image = nx.relabel_nodes(tree, labeling)
    assert set(image.edges) == set(RegularTreeModel(2, 4).arcs())


def test_ternary_tree():
    tree = shuffled(3, 3, seed=1)
    assert is_tree_isomorphism(tree, canonical_tree_labeling(tree, 3, 3), 3, 3)


def test_is_tree_isomorphism_rejects_bad_labelings():
    tree = RegularTreeModel(2, 2).to_digraph()
    labeling = {v: v for v in tree.nodes}
    labeling[parse_word("00")], labeling[parse_word("10")] = parse_word("10"), parse_word("00")
    assert not is_tree_isomorphism(tree, labeling, 2, 2)
    del labeling[parse_word("00")]
    assert not is_tree_isomorphism(tree, labeling, 2, 2)


def test_not_regular():
    tree = nx.DiGraph([("root", "a"), ("root", "b"), ("a", "c")])
    tree.add_node("b")
    with pytest.raises(NotRegular) as info:
        canonical_tree_labeling(tree, 2, 2)
    assert info.value.outdegree == 1


def test_leaf_below_depth_bound():
    tree = RegularTreeModel(2, 3).to_digraph()
    with pytest.raises(NotRegular):
        canonical_tree_labeling(tree, 2, 2)


def test_multiple_roots():
    tree = nx.DiGraph([("r1", "a"), ("r2", "b")])
    with pytest.raises(MultipleRoots):
        canonical_tree_labeling(tree, 1, 1)


def test_shared_child():
    tree = nx.DiGraph([("r", "a"), ("r", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
    with pytest.raises(NotATree):
        canonical_tree_labeling(tree, 2, 2)
