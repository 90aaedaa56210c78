import pytest
from hypothesis import given

from miscensus.graph import (
    Graph,
    GraphError,
    Graph6Error,
    bipartite_complement,
    bipartition,
    complement,
    disjoint_union,
    is_connected,
    is_triangle_free,
    is_twin_free,
    parse_graph6,
    predicates,
    read_graph6_lines,
    round_cap,
    to_graph6,
    twin_free_core,
    twins,
)
from miscensus.mis import imax

from conftest import graphs


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


class TestConstruction:
    def test_rejects_asymmetric(self):
        with pytest.raises(GraphError):
            Graph(2, [2, 0])

    def test_rejects_loop(self):
        with pytest.raises(GraphError):
            Graph(1, [1])

    def test_rejects_over_cap(self):
        with pytest.raises(GraphError):
            Graph.from_edges(70, [], cap=64)
        assert Graph.from_edges(70, [], cap=round_cap(70)).n == 70

    def test_round_cap(self):
        assert round_cap(1) == 64
        assert round_cap(64) == 64
        assert round_cap(65) == 128

    def test_edges_and_degree(self):
        g = path(4)
        assert g.edges() == [(0, 1), (1, 2), (2, 3)]
        assert g.num_edges == 3
        assert [g.degree(v) for v in range(4)] == [1, 2, 2, 1]
        assert g.has_edge(2, 1) and not g.has_edge(0, 3)

    def test_induced_relabels_in_order(self):
        g = path(5).induced(0b10110)
        assert g.n == 3 and g.edges() == [(0, 1)]

    def test_relabel_preserves_structure(self):
        g = path(4).relabel([3, 2, 1, 0])
        assert g.edges() == [(0, 1), (1, 2), (2, 3)]
        with pytest.raises(GraphError):
            path(3).relabel([0, 0, 1])

    def test_components(self):
        g = disjoint_union([path(2), complete(3), Graph(1, [0])])
        assert g.components() == [0b11, 0b11100, 0b100000]
        assert not is_connected(g)


class TestGraph6:
    @pytest.mark.parametrize("text,n,edges", [
        ("?", 0, []),
        ("@", 1, []),
        ("A_", 2, [(0, 1)]),
        ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
        ("Bg", 3, [(0, 1), (1, 2)]),
        ("BW", 3, [(0, 2), (1, 2)]),
    ])
    def test_known_strings(self, text, n, edges):
        g = parse_graph6(text)
        assert g.n == n and g.edges() == edges
        assert to_graph6(g) == text

    def test_large_order_header(self):
        g = Graph.from_edges(63, [(0, 62)], cap=64)
        s = to_graph6(g)
        assert s[0] == "~" and parse_graph6(s) == g
        big = Graph.from_edges(300, [(5, 299)], cap=round_cap(300))
        assert parse_graph6(to_graph6(big)) == big

    def test_header_accepted(self):
        assert parse_graph6(">>graph6<<Bw").n == 3

    @pytest.mark.parametrize("bad,reason", [
        ("", "empty"),
        (":Fa@x^", "sparse6"),
        ("&Bw", "digraph6"),
        ("A~", "padding"),
        ("Bw~", "trailing"),
        ("C", "truncated"),
        ("A\x7f", "outside"),
        ("~?", "truncated order"),
    ])
    def test_errors(self, bad, reason):
        with pytest.raises(Graph6Error, match=reason):
            parse_graph6(bad)

    def test_cap_enforced(self):
        with pytest.raises(Graph6Error, match="cap"):
            parse_graph6(to_graph6(Graph.from_edges(65, [], cap=128)), cap=64)

    def test_stream_line_numbers(self):
        lines = [">>graph6<<", "Bw", "", ">> comment", "A~"]
        it = read_graph6_lines(lines)
        assert next(it).n == 3
        with pytest.raises(Graph6Error) as exc:
            next(it)
        assert exc.value.line == 5 and "line 5" in str(exc.value)

    @given(graphs(max_n=20))
    def test_round_trip(self, g):
        assert parse_graph6(to_graph6(g)) == g

    @given(graphs(max_n=12))
    def test_column_major_bit_order(self, g):
        # independent re-encoding straight from the format description
        bitstr = "".join("1" if g.has_edge(i, j) else "0" for j in range(1, g.n) for i in range(j))
        bitstr += "0" * (-len(bitstr) % 6)
        body = "".join(chr(int(bitstr[k:k + 6], 2) + 63) for k in range(0, len(bitstr), 6))
        assert to_graph6(g) == chr(g.n + 63) + body


class TestTwins:
    def test_p3_has_twins(self):
        t = twins(path(3))
        assert t.classes == (0b101, 0b010)
        assert not t.twin_free

    def test_p4_twin_free(self):
        assert is_twin_free(path(4))

    def test_core_of_star(self):
        star = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
        core = twin_free_core(star)
        assert core.n == 2 and core.num_edges == 1

    def test_core_is_iterated(self):
        # removing one twin can create new twins
        g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 3), (2, 4)])
        core = twin_free_core(g)
        assert is_twin_free(core)

    @given(graphs(max_n=10))
    def test_core_preserves_count(self, g):
        core = twin_free_core(g)
        assert is_twin_free(core)
        assert imax(core) == imax(g)

    @given(graphs(max_n=10))
    def test_twin_free_definition(self, g):
        expected = len({g.adj[v] for v in range(g.n)}) == g.n
        assert is_twin_free(g) == expected


class TestPredicates:
    def test_cycles(self):
        assert bipartition(cycle(6)) is not None
        assert bipartition(cycle(5)) is None
        assert is_triangle_free(cycle(5)) and not is_triangle_free(complete(3))

    def test_tree_predicate(self):
        assert predicates(path(5)).tree
        assert not predicates(cycle(5)).tree
        assert not predicates(disjoint_union([path(2), path(2)])).tree

    @given(graphs(max_n=9))
    def test_bipartition_matches_two_colouring_search(self, g):
        two_colourable = any(
            all((s >> u & 1) != (s >> v & 1) for u, v in g.edges()) for s in range(1 << g.n)
        )
        parts = bipartition(g)
        assert (parts is not None) == two_colourable
        if parts is not None:
            a, b = parts
            assert a | b == g.full and a & b == 0
            assert all(not g.adj[v] & a for v in range(g.n) if a >> v & 1)
            assert all(not g.adj[v] & b for v in range(g.n) if b >> v & 1)

    @given(graphs(max_n=9))
    def test_triangle_free_matches_triples(self, g):
        has_triangle = any(
            g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
            for a in range(g.n) for b in range(a + 1, g.n) for c in range(b + 1, g.n)
        )
        assert is_triangle_free(g) == (not has_triangle)

    @given(graphs(max_n=9))
    def test_complement_involution(self, g):
        h = complement(g)
        assert h.num_edges == g.n * (g.n - 1) // 2 - g.num_edges
        assert complement(h) == g

    def test_bipartite_complement(self):
        g = cycle(6)
        a, b = bipartition(g)
        h = bipartite_complement(g, (a, b))
        assert bipartition(h) is not None
        assert h.num_edges == 9 - 6
        with pytest.raises(ValueError):
            bipartite_complement(g, (a, a))
