import networkx as nx
import numpy as np
import pytest
from specfac.graph import (
    add_edge,
    complete,
    construct_family,
    cycle_graph,
    empty_graph,
    from_networkx,
    is_connected,
    isolated_count,
    join,
    make_graph,
    non_edges,
    path_graph,
    random_connected_graph,
    star,
    union,
)


def test_family_layout():

    # K1 v (K17 u 2K1)
    G = construct_family(1, 17, 2)
    assert G.n == 20
    assert G.m == 19 + 17 * 16 // 2
    degrees = G.degrees()
    assert degrees[0] == 19
    assert all(d == 17 for d in degrees[1:18])
    assert degrees[18:] == [1, 1]

    # K2 v 4K1
    G = construct_family(2, 0, 4)
    assert G.n == 6 and G.m == 9
    assert sorted(G.degrees()) == [2, 2, 2, 2, 5, 5]

    # no hub
    G = construct_family(0, 3, 2)
    assert G.m == 3 and not is_connected(G)

    with pytest.raises(ValueError):
        construct_family(-1, 2, 2)
    with pytest.raises(ValueError):
        construct_family(0, 0, 0)


def test_isolated_count():

    G = construct_family(1, 17, 2)
    assert isolated_count(G) == 0
    assert isolated_count(G, [0]) == 2

    K13 = star(3)
    assert isolated_count(K13, [0]) == 3
    assert isolated_count(empty_graph(4)) == 4

    with pytest.raises(ValueError):
        isolated_count(K13, [7])


def test_invariants():

    graphs = [complete(6), path_graph(7), cycle_graph(5), star(4), construct_family(3, 4, 5)]
    for G in graphs:
        assert sum(G.degrees()) == 2 * G.m
        for v in range(G.n):
            assert v not in G.neighbors(v)
            for u in G.neighbors(v):
                assert G.has_edge(u, v)
        A = G.adjacency_matrix()
        np.testing.assert_array_equal(A, A.T)
        assert A.sum() == 2 * G.m


def test_construction_errors():

    with pytest.raises(ValueError):
        make_graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        make_graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        cycle_graph(2)

    # duplicates collapse
    assert make_graph(3, [(0, 1), (1, 0), (0, 1)]).m == 1


def test_join_union():

    G = join(complete(2), empty_graph(4))
    assert G == construct_family(2, 0, 4)
    H = union(path_graph(3), complete(3))
    assert H.n == 6 and H.m == 5
    assert not is_connected(H)
    assert is_connected(join(empty_graph(1), H))


def test_connectivity():

    assert is_connected(complete(1))
    assert not is_connected(empty_graph(2))
    assert not is_connected(empty_graph(0))
    assert is_connected(path_graph(10))
    assert not is_connected(make_graph(4, [(0, 1), (2, 3)]))


def test_add_edge():

    G = path_graph(4)
    missing = non_edges(G)
    assert missing == [(0, 2), (0, 3), (1, 3)]
    H = add_edge(G, 0, 3)
    assert H.m == G.m + 1
    assert H.has_edge(0, 3) and not G.has_edge(0, 3)


def test_induced():

    G = construct_family(2, 3, 4)
    sub, labels = G.induced([0, 1, 5, 6])
    assert labels == [0, 1, 5, 6]
    assert sub.n == 4
    # hubs adjacent to each other and to both independent vertices
    assert sub.m == 5
    with pytest.raises(ValueError):
        G.induced([0, 0])


def test_networkx_interop():

    rng = np.random.default_rng(11)
    for _ in range(20):
        G = random_connected_graph(9, 0.4, rng)
        H = G.to_networkx()
        assert H.number_of_nodes() == G.n
        assert H.number_of_edges() == G.m
        assert from_networkx(H) == G

    # relabelled nodes
    H = nx.relabel_nodes(nx.path_graph(4), {0: 10, 1: 11, 2: 12, 3: 13})
    assert from_networkx(H) == path_graph(4)


def test_random_connected_graph():

    for n, p in [(6, 0.3), (20, 0.5), (25, 0.95)]:
        G = random_connected_graph(n, p, rng=3)
        assert G.n == n
        assert is_connected(G)

    # reproducible from a seed
    assert random_connected_graph(12, 0.3, rng=5) == random_connected_graph(12, 0.3, rng=5)
    assert random_connected_graph(5, 1.0, rng=0) == complete(5)

    with pytest.raises(ValueError):
        random_connected_graph(5, 0.0)


if __name__ == "__main__":
    test_family_layout()
    test_isolated_count()
    test_invariants()
    test_construction_errors()
    test_join_union()
    test_connectivity()
    test_add_edge()
    test_induced()
    test_networkx_interop()
    test_random_connected_graph()
