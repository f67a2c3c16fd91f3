import itertools

import networkx as nx
import pytest

import coverdepth as cd


def test_golden_values():
    c4, p4 = cd.cycle_graph(4), cd.path_graph(4)
    assert cd.ordered_matching_number(c4) == 1
    assert cd.min_maximal_matching(c4) == 2
    assert cd.ordered_matching_number(p4) == 2
    assert cd.min_maximal_matching(p4) == 1
    assert cd.betti_table(cd.edge_ideal(c4))["invariants"]["reg_quotient"] == 1
    assert cd.hochster_reg_edge_ideal(p4) == 1


def test_graph_formats_match_networkx():
    for n in range(1, 8):
        for seed in range(5):
            h = nx.gnp_random_graph(n, 0.4, seed=seed)
            g = cd.Graph(n, sorted(h.edges()))
            assert g.graph6() == nx.to_graph6_bytes(h, header=False).decode().strip()
            assert cd.parse_graph(g.graph6()) == g
    assert cd.parse_graph("n=4;edges=0-1,1-2,2-3,3-0") == cd.cycle_graph(4)
    with pytest.raises(ValueError):
        cd.parse_graph("n=3;edges=0-0")


def test_ideals():
    j = cd.cover_ideal(cd.cycle_graph(4))
    assert str(j) == "(x2*x4, x1*x3)"
    assert j.generators == [[0, 1, 0, 1], [1, 0, 1, 0]]
    assert cd.alexander_dual(cd.alexander_dual(j)) == j
    assert cd.power(j, 2) == cd.symbolic_power_cover(cd.cycle_graph(4), 2)
    assert cd.colon(cd.power(j, 2), [1, 0, 1, 0]) == j
    assert cd.MonomialIdeal.parse("(x1, x2)", 2) == cd.MonomialIdeal(2, [[1, 0], [0, 1], [1, 1]])


def test_bipartite_count_matches_networkx():
    count = sum(1 for g in cd.enumerate_graphs(4, bipartite=True, min_edges=1))
    pairs = list(itertools.combinations(range(4), 2))
    expected = 0
    for mask in range(1, 1 << len(pairs)):
        h = nx.Graph()
        h.add_nodes_from(range(4))
        h.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
        expected += nx.is_bipartite(h)
    assert count == expected


def test_sdepth_and_decompositions():
    j = cd.cover_ideal(cd.cycle_graph(4))
    assert cd.sdepth(j, "ideal")["lower"] == 3
    q = cd.sdepth(j, "quotient")
    assert q["exact"] and q["lower"] == 2
    assert len(q["witness"]["intervals"]) > 0

    d = cd.decompose(cd.complete_graph(2), k=2, module="ideal")
    assert d["verified"]
    spaces = sorted((tuple(s["origin"]), tuple(s["free"])) for s in d["spaces"])
    assert spaces == [((0, 2), (1,)), ((1, 1), (1,)), ((2, 0), (0, 1))]
    assert cd.verify_decomposition(d)["ok"]
    d["spaces"].append(d["spaces"][0])
    assert not cd.verify_decomposition(d)["ok"]


def test_suite_report():
    assert "thm2.4" in cd.suite_ids()
    r = cd.run_suite("examples2.7")
    assert r["summary"]["fail"] == 0
    assert r["exit_code"] == 0
    with pytest.raises(ValueError):
        cd.run_suite("nope")
