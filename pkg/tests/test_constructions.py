import pytest

from miscensus.constructions import (
    CONSTRUCTIONS,
    InfeasibleConstruction,
    baton,
    bipartite_minus_matching,
    clique_subset_graph,
    clique_subset_graph_with_empty,
    extremal_tree_mod5,
    extremal_trees_n8,
    furedi_griggs_graph,
    lower_triangular_matrices,
    spider,
)
from miscensus.enumeration import canonical_form, census_trees
from miscensus.graph import bipartition, is_twin_free, predicates, to_graph6
from miscensus.mis import bipartite_min, connected_max, f_min_tree, imax, wilf_max_tree
from miscensus.setfamilies import matrix_conditions, matrix_to_bipartite


class TestCliqueSubsets:
    @pytest.mark.parametrize("k", range(2, 11))
    def test_order_and_count(self, k):
        g = clique_subset_graph(k)
        assert g.n == 2 ** (k - 1) + k - 2
        assert imax(g) == k
        assert is_twin_free(g) and predicates(g).connected

    def test_order_ten_example(self):
        g = clique_subset_graph(4)
        assert g.n == 10 and imax(g) == 4
        assert clique_subset_graph_with_empty(4).n == 11

    @pytest.mark.parametrize("k", range(2, 9))
    def test_empty_subset_variant(self, k):
        g = clique_subset_graph_with_empty(k)
        assert g.n == 2 ** (k - 1) + k - 1
        assert imax(g) == k
        assert is_twin_free(g) and not predicates(g).connected

    def test_output_is_stable(self):
        assert to_graph6(clique_subset_graph(3)) == to_graph6(clique_subset_graph(3))
        assert to_graph6(clique_subset_graph(3)) == "Dqo"  # edges 01 02 13 04 14

    def test_rejects_small_k(self):
        with pytest.raises(InfeasibleConstruction):
            clique_subset_graph(1)


class TestBipartiteMinusMatching:
    @pytest.mark.parametrize("n", [2] + list(range(4, 41)))
    def test_attains_bipartite_minimum(self, n):
        g = bipartite_minus_matching(n)
        p = predicates(g)
        assert p.connected and p.bipartite and is_twin_free(g)
        assert imax(g) == bipartite_min(n)

    @pytest.mark.xfail(strict=True, reason="order 3 isolates a vertex: no connected twin-free bipartite graph exists")
    def test_order_three(self):
        g = bipartite_minus_matching(3)
        assert imax(g) == bipartite_min(3)

    def test_order_three_structure(self):
        g = bipartite_minus_matching(3)
        assert g.edges() == [(0, 2)] and imax(g) == 2


class TestTrees:
    @pytest.mark.parametrize("n", range(4, 61))
    def test_mod5_attains_f(self, n):
        t = extremal_tree_mod5(n)
        assert predicates(t).tree and is_twin_free(t)
        assert imax(t) == f_min_tree(n)

    def test_n8_trees_are_the_census_witnesses(self):
        trees = extremal_trees_n8()
        assert all(imax(t) == 8 and is_twin_free(t) and predicates(t).tree for t in trees)
        assert sorted(canonical_form(t) for t in trees) == census_trees(8).witnesses

    @pytest.mark.parametrize("n", range(5, 31))
    def test_spiders_attain_tree_maximum(self, n):
        t = spider(n)
        assert predicates(t).tree and imax(t) == wilf_max_tree(n)

    @pytest.mark.parametrize("n", range(4, 31, 2))
    @pytest.mark.parametrize("length", [1, 3])
    def test_batons_attain_tree_maximum(self, n, length):
        t = baton(n, length)
        assert predicates(t).tree and imax(t) == wilf_max_tree(n)

    def test_unbalanced_baton(self):
        t = baton(12, 1, left=0)
        assert predicates(t).tree and imax(t) == wilf_max_tree(12)

    @pytest.mark.parametrize("bad", [lambda: spider(3), lambda: spider(4), lambda: baton(7, 1),
                                     lambda: baton(8, 2), lambda: baton(8, 1, left=9),
                                     lambda: extremal_tree_mod5(3)])
    def test_infeasible(self, bad):
        with pytest.raises(InfeasibleConstruction):
            bad()


class TestFurediGriggs:
    @pytest.mark.parametrize("n", range(6, 16))
    def test_attains_connected_maximum(self, n):
        g = furedi_griggs_graph(n)
        assert predicates(g).connected
        assert imax(g) == connected_max(n)

    def test_rejects_small(self):
        with pytest.raises(InfeasibleConstruction):
            furedi_griggs_graph(5)


class TestLowerTriangular:
    @pytest.mark.parametrize("k", range(3, 13))
    def test_family(self, k):
        mats = lower_triangular_matrices(k)
        assert len(mats) == 2 ** (k // 3)
        assert len(set(mats)) == len(mats)
        for m in mats:
            assert matrix_conditions(m)
            g = matrix_to_bipartite(m)
            assert bipartition(g) is not None and is_twin_free(g)
            assert imax(g) == k + 1

    def test_k6_gives_four(self):
        assert len(lower_triangular_matrices(6)) == 4


def test_registry_builders_match_expectations():
    for name, (build, expected) in CONSTRUCTIONS.items():
        arg = {"clique-subsets": 4, "clique-subsets-empty": 4}.get(name, 12)
        assert imax(build(arg)) == expected(arg), name
