"""Deterministic generators for the extremal families.

Vertex numbering is fixed (hub or clique first, then the attached pieces in
order) so graph6 output is byte-stable.  ``CONSTRUCTIONS`` maps CLI family
names to (builder, expected imax) pairs used by ``--selfcheck``.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, round_cap
from .mis import bipartite_min, connected_max, f_min_tree, wilf_max_tree
from .setfamilies import BinaryMatrix


class InfeasibleConstruction(ValueError):
    """The requested parameters do not describe a member of the family."""


def _build(n: int, edges: list[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, edges, cap=round_cap(n))


def clique_subset_graph(k: int, include_empty: bool = False) -> Graph:
    """Clique K_{k-1} plus one vertex per non-empty subset S of it, adjacent to exactly S.

    Order 2^(k-1) + k - 2 and exactly k maximal independent sets.  With
    ``include_empty`` an isolated vertex stands for S = {} (order one more).
    Subset vertices follow the clique in increasing bitmask order of S.
    """
    if k < 2:
        raise InfeasibleConstruction("k must be at least 2")
    c = k - 1
    edges = list(combinations(range(c), 2))
    v = c
    for s in range(0 if include_empty else 1, 1 << c):
        edges.extend((u, v) for u in range(c) if s >> u & 1)
        v += 1
    return _build(v, edges)


def clique_subset_graph_with_empty(k: int) -> Graph:
    return clique_subset_graph(k, include_empty=True)


def bipartite_minus_matching(n: int) -> Graph:
    """K_{floor(n/2), ceil(n/2)} minus a matching of size ceil(n/2) - 1.

    Class A is 0..a-1, class B is a..n-1; the removed edges are (i, a+i).
    For n = 3 the removal isolates a vertex, so no connected graph results.
    """
    if n < 2:
        raise InfeasibleConstruction("n must be at least 2")
    a = n // 2
    b = n - a
    removed = {(i, a + i) for i in range(b - 1)}
    edges = [(i, a + j) for i in range(a) for j in range(b) if (i, a + j) not in removed]
    return _build(n, edges)


def spider(n: int) -> Graph:
    """Centre 0 with legs of length two; even orders get one extra pendant vertex at the centre.

    At least two legs are required (fewer gives a path, not a spider).
    """
    legs = (n - 1) // 2
    if legs < 2:
        raise InfeasibleConstruction(f"a spider needs at least two legs (n >= 5), got n={n}")
    edges = []
    for i in range(legs):
        mid, tip = 1 + 2 * i, 2 + 2 * i
        edges += [(0, mid), (mid, tip)]
    if n % 2 == 0:
        edges.append((0, n - 1))
    return _build(n, edges)


def baton(n: int, length: int, left: int | None = None) -> Graph:
    """Two centres joined by a path of ``length`` edges (1 or 3), each carrying legs of length two.

    ``left`` legs hang off the first centre and the rest off the second; the
    default splits them as evenly as possible.
    """
    if length not in (1, 3):
        raise InfeasibleConstruction("baton length must be 1 or 3")
    if n % 2 or n < 4:
        raise InfeasibleConstruction(f"batons have even order >= 4, got n={n}")
    spine = length + 1
    legs = (n - spine) // 2
    if left is None:
        left = (legs + 1) // 2
    if not 0 <= left <= legs:
        raise InfeasibleConstruction(f"left must be between 0 and {legs}")
    edges = [(i, i + 1) for i in range(spine - 1)]
    v = spine
    for i in range(legs):
        centre = 0 if i < left else spine - 1
        edges += [(centre, v), (v, v + 1)]
        v += 2
    return _build(n, edges)


def furedi_griggs_graph(n: int) -> Graph:
    """n mod 3 copies of K4 and the rest K3, one vertex of each joined into a star.

    The star centre is the first clique, a K4 whenever there is one.
    """
    if n < 6:
        raise InfeasibleConstruction("defined for n >= 6")
    r = n % 3
    sizes = [4] * r + [3] * ((n - 4 * r) // 3)
    edges = []
    anchors = []
    v = 0
    for s in sizes:
        edges += [(v + i, v + j) for i, j in combinations(range(s), 2)]
        anchors.append(v)
        v += s
    edges += [(anchors[0], a) for a in anchors[1:]]
    return _build(n, edges)


def _leg(edges: list[tuple[int, int]], hub: int, v: int) -> int:
    # Path of four from the hub with an extra leaf on the second vertex.
    edges += [(hub, v), (v, v + 1), (v + 1, v + 2), (v + 2, v + 3), (v + 1, v + 4)]
    return v + 5


def extremal_tree_mod5(n: int) -> Graph:
    """Twin-free tree of order ``n`` >= 4 with exactly f(n) maximal independent sets.

    For n = 0, 1, 4 (mod 5): a path of four hanging from a hub, extended by
    one or two vertices for residues 0 and 1, plus (n-4)//5 legs at the hub.
    For n = 2, 3 (mod 5): the hub carries a leaf, a path of two and a path of
    three (four for residue 3), plus (n-7)//5 legs.
    """
    if n < 4:
        raise InfeasibleConstruction("defined for n >= 4")
    r = n % 5
    edges: list[tuple[int, int]] = []
    if r in (0, 1, 4):
        spine = {4: 4, 0: 5, 1: 6}[r]
        edges = _spine_a(spine)
        v = spine
        legs = (n - 4) // 5
    else:
        edges = _spine_b(8 if r == 3 else 7)
        v = 8 if r == 3 else 7
        legs = (n - 7) // 5
    for _ in range(legs):
        v = _leg(edges, 0, v)
    assert v == n
    return _build(n, edges)


def _spine_a(size: int) -> list[tuple[int, int]]:
    # hub 0, top leaf 1, then the downward path 2, 3, ... (size - 2 vertices)
    edges = [(0, 1), (0, 2)]
    edges += [(i, i + 1) for i in range(2, size - 1)]
    return edges


def _spine_b(size: int) -> list[tuple[int, int]]:
    # hub 0, top leaf 1, side path 2-3, main path 4-5-6 (-7)
    edges = [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]
    if size == 8:
        edges.append((6, 7))
    return edges


def extremal_trees_n8() -> list[Graph]:
    """The three twin-free trees of order 8 with eight maximal independent sets."""
    # centre with a leaf and two paths of three
    a = _build(8, [(0, 1), (0, 2), (2, 3), (3, 4), (0, 5), (5, 6), (6, 7)])
    # centre with a leaf, a path of four and a path of two
    b = _build(8, [(0, 1), (0, 2), (2, 3), (3, 4), (4, 5), (0, 6), (6, 7)])
    # two paths of four joined at their third vertices
    c = _build(8, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (2, 6)])
    return [a, b, c]


def lower_triangular_matrices(k: int) -> list[BinaryMatrix]:
    """All 2^floor(k/3) lower-triangular all-ones matrices with optional entries (3i, 3i+2).

    Indices are 0-based; choice bit i of the enumeration index switches entry
    (3i, 3i+2) on.
    """
    if k < 3:
        raise InfeasibleConstruction("k must be at least 3")
    base = [(1 << (i + 1)) - 1 for i in range(k)]
    t = k // 3
    out = []
    for choice in range(1 << t):
        rows = list(base)
        for i in range(t):
            if choice >> i & 1:
                rows[3 * i] |= 1 << (3 * i + 2)
        out.append(BinaryMatrix(k, tuple(rows)))
    return out


# name -> (builder taking keyword parameters, expected imax from the same parameters)
CONSTRUCTIONS = {
    "clique-subsets": (lambda k: clique_subset_graph(k), lambda k: k),
    "clique-subsets-empty": (lambda k: clique_subset_graph_with_empty(k), lambda k: k),
    "bip-minus-matching": (lambda n: bipartite_minus_matching(n), bipartite_min),
    "spider": (lambda n: spider(n), wilf_max_tree),
    "baton": (lambda n, length=1: baton(n, length), lambda n, length=1: wilf_max_tree(n)),
    "furedi-griggs": (lambda n: furedi_griggs_graph(n), connected_max),
    "tree-mod5": (lambda n: extremal_tree_mod5(n), f_min_tree),
}
