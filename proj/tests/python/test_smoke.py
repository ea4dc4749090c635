import networkx as nx
import pytest

import sprecon


def cycle(n):
    return sprecon.Graph(n, [(v, (v + 1) % n) for v in range(n)])


def test_graph_roundtrip():
    g = cycle(6)
    assert g.num_vertices == 6 and g.num_edges == 6
    assert g.neighbors(0) == [1, 5]
    text = sprecon.write_edge_list(g)
    assert sprecon.read_edge_list(text) == g


def test_parse_error_is_value_error():
    with pytest.raises(ValueError, match="self-loop at line 2"):
        sprecon.read_edge_list("2 1\n0 0\n")


def test_bfs_matches_networkx():
    g = sprecon.generate("bounded_degree_connected", 200, max_degree=4, seed=3)
    ref = nx.Graph(g.edges())
    want = nx.single_source_shortest_path_length(ref, 0)
    got = sprecon.bfs_distances(g, 0)
    assert all(got[v] == d for v, d in want.items())


def test_layering_of_cycle():
    g = cycle(6)
    assert sprecon.layers(g) == [[0], [1, 5], [2, 4], [3]]
    assert [p[1] for p in sprecon.parts(g)] == [[0], [1, 5], [2, 4], [3]]
    assert sprecon.tree_length(g) == 2
    assert sprecon.layering_tree_dump(g).splitlines()[1] == "  1 L1: 1 5"


def test_reconstruct_tree():
    g = sprecon.generate("random_tree", 500, max_degree=4, seed=1)
    out = sprecon.reconstruct(g, tau=1, strict_budget=True)
    assert out["correct"]
    assert out["graph"] == g
    assert out["q_rootbfs"] == 499
    assert out["ledger"]["per_phase"]["root_bfs"] == 499
    assert out["q_total"] < 500 * 499 // 2
    assert out["violations"] == []


def test_reconstruct_matches_naive():
    g = sprecon.generate("ring_of_cliques", 60, max_degree=4, clique_size=4, seed=2)
    out = sprecon.reconstruct(g, ell_from_truth=True)
    naive, queries = sprecon.reconstruct_naive(g)
    assert out["graph"] == naive == g
    assert queries == 60 * 59 // 2


def test_run_experiment_record():
    rec = sprecon.run_experiment("k_tree", 300, max_degree=8, seed=4)
    assert rec["family"] == "k_tree" and rec["tau"] == 1 and rec["ell"] == 3
    assert rec["correct"]
    with pytest.raises(ValueError):
        sprecon.run_experiment("cycle", 20, max_degree=2)


def test_generated_kt_is_chordal():
    g = sprecon.generate("k_tree", 100, max_degree=6, seed=9)
    assert sprecon.is_chordal(g)
    assert nx.is_chordal(nx.Graph(g.edges()))
