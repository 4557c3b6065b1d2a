import json

import pytest

import eoram


def test_constructions():
    g = eoram.lex_complete(4)
    assert g.sequence == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    assert eoram.is_lexicographic(eoram.edge_monotone_path(4))
    assert eoram.consistent_maps(eoram.lex_complete(3))


def test_ramsey_values():
    assert eoram.lex_ramsey(eoram.lex_complete(3), 7)["value"] == 6
    assert eoram.classic_ramsey(eoram.Graph.complete(3), 5)["value"] is None
    path = eoram.VertexOrderedGraph.natural(eoram.edge_monotone_path(3).graph)
    assert eoram.ordered_ramsey(path, 6)["value"] == 5
    assert eoram.edge_ordered_ramsey(eoram.matching(4), 5)["value"] == 5


def test_embedding_and_copies():
    host = eoram.lex_complete(5)
    mapping = eoram.find_embedding(eoram.edge_monotone_path(3), host)
    assert mapping is not None and len(mapping) == 3
    assert eoram.find_embedding(eoram.lex_complete(6), host) is None
    assert len(eoram.enumerate_copies(eoram.lex_complete(3), host)) == 10


def test_greedy_certificate_verifies():
    path = eoram.Graph(3, [(0, 1), (1, 2)])
    n = eoram.greedy_host_size(path, 2)
    assert n == 36
    cert = eoram.greedy_certificate(path, 2, [0] * (n * (n - 1) // 2))
    ok, _ = eoram.verify_certificate(cert)
    assert ok
    doc = json.loads(cert)
    doc["coloring"]["colors"] = [1] * len(doc["coloring"]["colors"])
    assert not eoram.verify_certificate(doc)[0]


def test_probability_and_matrices():
    assert eoram.containment_probability_exact(eoram.lex_bipartite(2, 2), eoram.Graph.complete_bipartite(2, 2)) == (1, 3)
    p, se = eoram.containment_probability_mc(eoram.lex_bipartite(2, 2), eoram.Graph.complete_bipartite(2, 2), 10000, 0)
    assert abs(p - 1 / 3) <= 4 * se
    feasible, margin = eoram.lemma9_feasible(2, 2, 20, 40)
    assert not feasible and margin == pytest.approx(34.632, abs=1e-3)
    assert eoram.max_weight_avoiding_path(4, 4, 4) == 7 == eoram.fh_weight_bound(4, 8)


def test_words():
    assert eoram.compose_words(["L1", "0", "L2", "L3", "L2"], 3, ["L1", "0", "L2"], 2) == ["L1", "0", "0", "L2", "0"]
    assert eoram.word_blocks(["L1", "L2", "L1"], 2) == [[1, 3], [2]]


def test_errors_are_translated():
    with pytest.raises(eoram.EoramError):
        eoram.Graph(2, [(0, 0)])
    with pytest.raises(eoram.EoramError):
        eoram.word_blocks(["L2"], 2)


def test_experiment():
    result = eoram.run_experiment("theorem8")
    assert result["pass"]
