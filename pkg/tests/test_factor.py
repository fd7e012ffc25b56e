import numpy as np
import pytest
from specfac.enumeration import enumerate_connected
from specfac.factor import (
    BlockKind,
    CriterionWitness,
    FactorBlock,
    FactorCertificate,
    find_factor,
    has_factor_criterion,
    has_factor_independent,
    sample_violation,
    verify_certificate,
)
from specfac.graph import (
    complete,
    construct_family,
    cycle_graph,
    empty_graph,
    path_graph,
    random_connected_graph,
    star,
)
from specfac.io import graph6_decode
from specfac.trees import spider
from specfac.util import CapabilityError, InconclusiveSearchError


def test_witnesses():

    has, witness = has_factor_criterion(graph6_decode("Cs"))
    assert not has
    assert witness == CriterionWitness((0,), 3)
    assert witness.slack == 1.5

    has, witness = has_factor_criterion(construct_family(2, 0, 4))
    assert not has
    assert witness.subset == (0, 1) and witness.isolated == 4

    for n in [5, 13, 20]:
        for strategy in ["subsets", "neighborhood", "auto"]:
            has, witness = has_factor_criterion(construct_family(1, n - 3, 2), strategy)
            assert not has
            assert witness.to_dict() == {"S": [0], "i": 2, "slack": 0.5}

    # isolated vertex: violated by the empty set
    has, witness = has_factor_criterion(empty_graph(1))
    assert not has and witness.subset == () and witness.isolated == 1

    for G in [complete(2), complete(3), path_graph(5), cycle_graph(7), complete(20)]:
        assert has_factor_criterion(G) == (True, None)


def test_strategies_agree():

    for n in range(2, 7):
        for G in enumerate_connected(n):
            by_subsets = has_factor_criterion(G, "subsets")
            by_neighborhood = has_factor_criterion(G, "neighborhood")
            assert by_subsets == by_neighborhood
            assert has_factor_independent(G) == by_subsets[0]

    rng = np.random.default_rng(8)
    for _ in range(30):
        G = random_connected_graph(14, 0.2, rng)
        assert has_factor_criterion(G, "subsets") == has_factor_criterion(G, "neighborhood")


def test_decomposition_matches_criterion():

    for n in range(2, 8):
        for G in enumerate_connected(n):
            has, _ = has_factor_criterion(G)
            cert = find_factor(G)
            assert (cert is not None) == has
            if cert is not None:
                assert verify_certificate(G, cert)


def test_find_factor_kinds():

    assert find_factor(path_graph(5)).kinds() == [BlockKind.P5]
    assert find_factor(complete(3)).kinds() == [BlockKind.C3]
    assert find_factor(complete(2)).kinds() == [BlockKind.P2]
    assert find_factor(path_graph(10)).kinds() == [BlockKind.P5, BlockKind.P5]
    assert find_factor(spider(3, 3)).kinds() == [BlockKind.T3]
    assert find_factor(star(3)) is None
    assert find_factor(construct_family(1, 3, 2)) is None

    cert = find_factor(spider(3, 3))
    assert cert.to_dict()["blocks"][0]["kind"] == "T3"
    assert verify_certificate(spider(3, 3), cert, return_reason=True) == (True, "ok")

    with pytest.raises(InconclusiveSearchError):
        find_factor(path_graph(10), budget=1)
    with pytest.raises(CapabilityError):
        find_factor(path_graph(15))
    with pytest.raises(ValueError):
        find_factor(path_graph(5), block_cap=4)


def test_tampered_certificates():

    G = path_graph(5)
    assert verify_certificate(G, find_factor(G))

    P5_edges = [(0, 1), (1, 2), (2, 3), (3, 4)]
    cases = [
        # vertex 4 uncovered
        (G, [([0, 1, 2, 3], "P5", P5_edges[:3])], "not_partition"),
        (G, [([0, 1, 2, 3, 4], "P5", [(0, 1), (1, 2), (3, 4)])], "not_spanning_path"),
        (star(3), [([0, 1], "P2", [(0, 1)]), ([2, 3], "P2", [(2, 3)])], "missing_edge"),
        (path_graph(3), [([0, 1, 2], "P2", [(0, 1)])], "bad_size"),
        (complete(3), [([0, 1, 2], "C3", [(0, 1), (1, 2)])], "not_triangle"),
        (path_graph(4), [([0, 1], "P2", [(0, 1)]), ([2, 3], "P2", [(2, 1)])], "edge_outside_block"),
        (G, [([0, 1, 2, 3, 4], "P5", P5_edges[:3] + [(0, 1)])], "repeated_edge"),
        # P5 is also the smallest T3 member
        (G, [([0, 1, 2, 3, 4], "T3", P5_edges)], "ok"),
    ]
    for H, blocks, reason in cases:
        ok, got = verify_certificate(H, FactorCertificate(blocks), return_reason=True)
        print(blocks, got)
        assert got == reason
        assert ok == (reason == "ok")


def test_certificate_blocks():

    block = FactorBlock([2, 0, 1], "C3", [(1, 0), (2, 1), (0, 2)])
    assert block.vertices == (0, 1, 2)
    assert block.edges == ((0, 1), (0, 2), (1, 2))
    with pytest.raises(ValueError):
        FactorBlock([0, 1], "P3", [(0, 1)])


def test_caps():

    with pytest.raises(CapabilityError):
        has_factor_criterion(path_graph(27), "subsets")
    with pytest.raises(CapabilityError):
        has_factor_criterion(path_graph(65))
    with pytest.raises(CapabilityError):
        has_factor_independent(path_graph(27))
    with pytest.raises(ValueError):
        has_factor_criterion(empty_graph(0))
    with pytest.raises(ValueError):
        has_factor_criterion(path_graph(4), "greedy")


def test_sampled_violation():

    G = construct_family(1, 67, 2)
    witness = sample_violation(G, trials=2000, seed=1)
    assert witness is not None
    assert 2 * witness.isolated > 3 * len(witness.subset)
    assert witness.subset == (0,)

    assert sample_violation(complete(70), trials=200, seed=1) is None


if __name__ == "__main__":
    test_witnesses()
    test_strategies_agree()
    test_decomposition_matches_criterion()
    test_find_factor_kinds()
    test_tampered_certificates()
    test_certificate_blocks()
    test_caps()
    test_sampled_violation()
