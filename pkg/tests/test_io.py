import io
import networkx as nx
import numpy as np
import pytest
from specfac.graph import complete, construct_family, empty_graph, path_graph, star
from specfac.graph import random_connected_graph
from specfac.io import (
    graph6_decode,
    graph6_encode,
    read_graph6_file,
    read_graph6_lines,
    write_csv,
    write_graph6_file,
    write_jsonl,
)
from specfac.util import CapabilityError, Graph6Error


def test_known_strings():

    assert graph6_encode(complete(2)) == "A_"
    assert graph6_encode(star(3)) == "Cs"
    assert graph6_encode(empty_graph(1)) == "@"
    assert graph6_decode("A_") == complete(2)
    assert graph6_decode("Cs") == star(3)
    assert graph6_decode(b"Cs\n") == star(3)
    assert graph6_decode(">>graph6<<A_") == complete(2)


def test_against_networkx():

    rng = np.random.default_rng(1)
    graphs = [construct_family(1, 17, 2), path_graph(9), complete(7)]
    graphs += [random_connected_graph(n, 0.4, rng) for n in (5, 12, 40, 70)]
    for G in graphs:
        ref = nx.to_graph6_bytes(G.to_networkx(), header=False).strip().decode()
        text = graph6_encode(G)
        print(text)
        assert text == ref
        H = nx.from_graph6_bytes(text.encode())
        assert nx.is_isomorphic(H, G.to_networkx())
        assert sorted(H.edges()) == G.edges()
        assert graph6_decode(text) == G


def test_malformed():

    bad = [
        "",
        "A",  # missing data
        "A`",  # non-zero padding
        "A_?",  # trailing data
        ":Fa@x^",  # sparse6
        "A!",  # character out of range
        "~??F",  # long header for a small order
    ]
    for text in bad:
        with pytest.raises(Graph6Error):
            graph6_decode(text)

    # 36-bit size header
    with pytest.raises(CapabilityError):
        graph6_decode("~~??????")


def test_stream(tmp_path):

    fh = io.StringIO("A_\n\n   \nCs\n>>graph6<<A_\n")
    assert list(read_graph6_lines(fh)) == ["A_", "Cs", ">>graph6<<A_"]
    fh.seek(0)
    assert list(read_graph6_file(fh)) == [complete(2), star(3), complete(2)]

    fp = tmp_path / "graphs.g6"
    graphs = [path_graph(n) for n in range(1, 10)]
    assert write_graph6_file(fp, graphs) == len(graphs)
    assert list(read_graph6_file(fp)) == graphs
    assert list(read_graph6_file(str(fp))) == graphs


def test_records(tmp_path):

    fp = tmp_path / "out.jsonl"
    write_jsonl(fp, [{"b": 1, "a": 0.1 + 0.2}], append=False)
    write_jsonl(fp, [{"c": np.float64(2.0)}])
    lines = fp.read_text().splitlines()
    assert lines == ['{"a": 0.3, "b": 1}', '{"c": 2.0}']

    fp = tmp_path / "out.csv"
    write_csv(fp, [{"x": 1, "y": 2}], ["x", "y"])
    write_csv(fp, [{"x": 3, "y": 4}], ["x", "y"])
    assert fp.read_text().splitlines() == ["x,y", "1,2", "3,4"]


if __name__ == "__main__":
    test_known_strings()
    test_against_networkx()
    test_malformed()
