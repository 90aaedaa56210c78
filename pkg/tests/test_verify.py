import random
from collections import Counter

from miscensus import verify
from miscensus.enumeration import canonical_form, free_trees, small_graphs
from miscensus.graph import Graph, predicates
from miscensus.mis import invariants


def test_random_tree_covers_all_shapes():
    rng = random.Random(5)
    seen = Counter(canonical_form(verify.random_tree(6, rng)) for _ in range(3000))
    assert set(seen) == {canonical_form(t) for t in free_trees(6)}
    assert all(predicates(verify.random_tree(n, rng)).tree for n in range(2, 30))


def test_invariant_bounds_report_tau_extremes():
    graphs = small_graphs(5, connected_only=True)
    rep = verify.check_invariant_bounds(graphs)
    assert rep.passed and rep.rows[0]["n"] == len(graphs)
    gap = rep.notes["max_tau_minus_imax_minus_half_n_plus_3"]
    expected = max(invariants(g).vertex_cover - verify.imax(g) - (g.n // 2 - 3) for g in graphs)
    assert gap["value"] == expected


def test_invariant_bounds_flag_counterexample(monkeypatch):
    monkeypatch.setattr(verify, "imax", lambda g: 100)
    k4 = Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    rep = verify.check_invariant_bounds([k4])
    assert not rep.passed
    assert rep.counterexample["expected"] == "2^nu <= imax <= 2^tau"


def test_report_keeps_first_failure():
    rep = verify.SuiteReport("x")
    rep.fail({"expected": "a", "actual": "b"})
    rep.fail({"expected": "c", "actual": "d"})
    assert rep.as_dict()["counterexample"]["expected"] == "a"
    assert rep.as_dict()["status"] == "fail"


def test_thm2_probe_is_report_only():
    rep = verify.suite_thm2(max_n=7)
    assert rep.passed
    assert "trianglefree_probe" in rep.notes


def test_all_suites_registered():
    assert set(verify.SUITES) == {"thm1", "thm2", "thm3", "lemma-wilf", "inequalities",
                                  "milner", "matrices", "forests"}
