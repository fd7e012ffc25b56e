import networkx as nx
import pytest
from specfac.canonical import are_isomorphic
from specfac.graph import complete, cycle_graph, from_networkx, path_graph, star
from specfac.trees import (
    TreeSpec,
    expand_to_T3,
    generate_13_trees,
    is_T3_member,
    spider,
    t3_members,
)
from specfac.util import CapabilityError



def test_13_trees():

    trees = generate_13_trees(4)
    internal = [len(R.internal()) for R in trees]
    assert internal == [0, 1, 2, 3, 4, 4]
    for R in trees:
        assert R.is_13_tree()
        assert len(R.leaves()) == len(R.internal()) + 2
    with pytest.raises(CapabilityError):
        generate_13_trees(9)


def test_expand():

    assert are_isomorphic(expand_to_T3(complete(2)).graph, path_graph(5))
    T = expand_to_T3(star(3))
    assert T.n == 10
    assert are_isomorphic(T.graph, spider(3, 3))
    with pytest.raises(ValueError):
        expand_to_T3(path_graph(3))


def test_membership():

    assert is_T3_member(path_graph(5))
    assert is_T3_member(spider(3, 3))
    assert not is_T3_member(path_graph(10))
    assert not is_T3_member(star(4))
    assert not is_T3_member(spider(3, 2))
    assert not is_T3_member(cycle_graph(5))

    for R in generate_13_trees(6):
        T = expand_to_T3(R)
        assert T.n == 5 * len(R.internal()) + 5
        assert is_T3_member(T)


def test_members_by_size():

    for size in [5, 10, 15, 20]:
        assert len(t3_members(size)) == 1
    assert len(t3_members(25)) == 2
    assert t3_members(7) == ()

    # brute force over all trees of the order
    for size in [5, 10, 15]:
        trees = [from_networkx(T) for T in nx.nonisomorphic_trees(size)]
        found = [T for T in trees if is_T3_member(T)]
        assert len(found) == len(t3_members(size))
        assert all(any(are_isomorphic(F, M) for M in t3_members(size)) for F in found)

    with pytest.raises(CapabilityError):
        t3_members(50)


def test_tree_spec():

    R = TreeSpec(star(3))
    assert R.roles() == ["degree-3", "leaf", "leaf", "leaf"]
    assert TreeSpec(complete(1)).roles() == ["isolated"]
    with pytest.raises(ValueError):
        TreeSpec(cycle_graph(4))
    with pytest.raises(ValueError):
        TreeSpec(nx.path_graph(3))


if __name__ == "__main__":
    test_13_trees()
    test_expand()
    test_membership()
    test_members_by_size()
    test_tree_spec()
