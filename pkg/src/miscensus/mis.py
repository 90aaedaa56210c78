"""Counting maximal independent sets, closed-form extremal values and exact invariants."""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from . import kernels
from .graph import Graph, bits, popcount, predicates
from .kernels import BudgetExceeded

__all__ = [
    "BudgetExceeded",
    "MisReport",
    "count_mis",
    "imax",
    "perrin",
    "f_min_tree",
    "wilf_max_tree",
    "moon_moser_max",
    "connected_max",
    "bipartite_min",
    "min_imax_connected_graph",
    "BoundTable",
    "bound_table",
    "WilfDecomposition",
    "wilf_decompose",
    "wilf_formula_check",
    "GraphInvariants",
    "invariants",
    "vertex_signatures",
]

BRUTE_FORCE_CAP = 32


@dataclass(frozen=True)
class MisReport:
    """Exact count plus (optionally) up to ``limit`` witnesses, sorted as bitmasks."""

    count: int
    witnesses: tuple[int, ...] = field(default=())
    truncated: bool = False


def _ensure_depth(n: int) -> None:
    # The pure-Python recursion is one frame per chosen vertex.
    need = 2 * n + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def count_mis(g: Graph, witness_limit: int = 0, budget: int = 0) -> MisReport:
    """Count maximal independent sets of ``g`` by a pivoting candidate/excluded recursion.

    With ``witness_limit > 0`` the first ``witness_limit`` sets reached by the
    recursion are returned in increasing bitmask order.  ``budget`` bounds the
    number of recursion nodes (0 = unlimited); exceeding it raises
    :class:`BudgetExceeded`.
    """
    _ensure_depth(g.n)
    if witness_limit <= 0:
        return MisReport(kernels.mis_count(g.adj, budget))
    count, found = kernels.mis_list(g.adj, witness_limit, budget)
    return MisReport(count, tuple(sorted(found)), truncated=count > len(found))


def imax(g: Graph, budget: int = 0) -> int:
    """Shorthand for ``count_mis(g).count``."""
    _ensure_depth(g.n)
    return kernels.mis_count(g.adj, budget)


def vertex_signatures(g: Graph) -> list[int]:
    """For every vertex, the bitmask of indices of the maximal independent sets containing it.

    Sets are indexed in increasing bitmask order.
    """
    report = count_mis(g, witness_limit=imax(g))
    sig = [0] * g.n
    for idx, s in enumerate(report.witnesses):
        for v in bits(s):
            sig[v] |= 1 << idx
    return sig


# -- closed forms -------------------------------------------------------------

def perrin(n: int) -> int:
    if n < 0:
        raise ValueError("Perrin numbers are defined for n >= 0")
    a, b, c = 3, 0, 2
    for _ in range(n):
        a, b, c = b, c, a + b
    return a


def f_min_tree(n: int) -> int:
    """Minimum number of maximal independent sets over twin-free trees of order ``n``.

    f(1)=1, f(2)=f(3)=2; from n=4 on the value depends on n mod 5.
    """
    if n < 1:
        raise ValueError("f is defined for n >= 1")
    if n <= 3:
        return (1, 2, 2)[n - 1]
    r = n % 5
    if r == 0:
        return 4 * 3 ** (n // 5 - 1)
    if r == 1:
        return 5 * 3 ** ((n - 6) // 5)
    if r == 2:
        return 2 * 3 ** ((n - 2) // 5)
    if r == 3:
        return 8 * 3 ** ((n - 8) // 5)
    return 3 ** ((n + 1) // 5)


def wilf_max_tree(n: int) -> int:
    """Maximum over trees of order ``n`` (attained by spiders and batons)."""
    if n < 2:
        raise ValueError("the tree maximum requires n >= 2")
    if n % 2 == 0:
        return 2 ** (n // 2 - 1) + 1
    return 2 ** ((n - 1) // 2)


def moon_moser_max(n: int) -> int:
    """Maximum over all graphs of order ``n``."""
    if n < 2:
        raise ValueError("the Moon-Moser bound requires n >= 2")
    r = n % 3
    if r == 0:
        return 3 ** (n // 3)
    if r == 1:
        return 4 * 3 ** ((n - 4) // 3)
    return 2 * 3 ** ((n - 2) // 3)


def connected_max(n: int) -> int:
    """Maximum over connected graphs of order ``n`` (Furedi; Griggs, Grinstead and Guichard).

    Below n = 6 the three-case formula is not an integer for every n; the
    floor of its exact value is returned there.
    """
    if n < 2:
        raise ValueError("the connected maximum requires n >= 2")
    r = n % 3
    if r == 0:
        val = 2 * Fraction(3) ** (n // 3 - 1) + Fraction(2) ** (n // 3 - 1)
    elif r == 1:
        val = Fraction(3) ** ((n - 1) // 3) + Fraction(2) ** ((n - 4) // 3)
    else:
        val = 4 * Fraction(3) ** ((n - 5) // 3) + 3 * Fraction(2) ** ((n - 8) // 3)
    return val.numerator // val.denominator


def bipartite_min(n: int) -> int:
    """Minimum over connected twin-free bipartite graphs of order ``n``: ceil(n/2) + 1."""
    if n < 2:
        raise ValueError("the bipartite minimum requires n >= 2")
    return -(-n // 2) + 1


def min_imax_connected_graph(n: int) -> int:
    """Smallest k with n <= 2^(k-1) + k - 2, the minimum over connected twin-free graphs."""
    if n < 2:
        raise ValueError("requires n >= 2")
    k = 2
    while n > 2 ** (k - 1) + k - 2:
        k += 1
    return k


@dataclass(frozen=True)
class BoundTable:
    n: int
    f: int
    wilf_max: int
    moon_moser: int
    connected_max: int
    bipartite_min: int


def bound_table(n: int) -> BoundTable:
    return BoundTable(n, f_min_tree(n), wilf_max_tree(n), moon_moser_max(n), connected_max(n), bipartite_min(n))


# -- Wilf's decomposition -----------------------------------------------------

@dataclass(frozen=True)
class WilfPart:
    root: int
    vertices: int
    subtrees: tuple[tuple[int, int], ...]  # (w_ij, W_ij mask)


@dataclass(frozen=True)
class WilfDecomposition:
    leaf: int
    y: int
    parts: tuple[WilfPart, ...]


def _component(g: Graph, start: int, allowed: int) -> int:
    comp = frontier = 1 << start
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & allowed & ~comp
        comp |= frontier
    return comp


def wilf_decompose(t: Graph, x: int) -> WilfDecomposition:
    """Split tree ``t`` at leaf ``x`` and its neighbour ``y``.

    Each part is a component U of T - {x, y} with its root u (a neighbour of
    y), and the components W of U - u with their roots w (neighbours of u).
    """
    if not predicates(t).tree:
        raise ValueError("input is not a tree")
    if not 0 <= x < t.n or t.degree(x) != 1:
        raise ValueError(f"vertex {x} is not a leaf")
    y = t.adj[x].bit_length() - 1
    rest = t.full & ~(1 << x) & ~(1 << y)
    parts = []
    for u in bits(t.adj[y] & ~(1 << x)):
        comp = _component(t, u, rest)
        inner = comp & ~(1 << u)
        subs = []
        for w in bits(t.adj[u] & inner):
            subs.append((w, _component(t, w, inner)))
        parts.append(WilfPart(u, comp, tuple(subs)))
    return WilfDecomposition(x, y, tuple(parts))


def wilf_formula_check(t: Graph, x: int) -> tuple[int, int]:
    """(direct count, product-sum over the decomposition); the two must agree."""
    dec = wilf_decompose(t, x)
    lhs = imax(t)
    first = prod(imax(t.induced(p.vertices)) for p in dec.parts)
    second = prod(imax(t.induced(w)) for p in dec.parts for _, w in p.subtrees)
    return lhs, first + second


# -- exact invariants ---------------------------------------------------------

@dataclass(frozen=True)
class GraphInvariants:
    chromatic: int
    clique: int
    vertex_cover: int
    induced_matching: int


def _max_clique(adj: tuple[int, ...], cand: int) -> int:
    best = 0

    def grow(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + popcount(cand) <= best:
            return
        while cand:
            if size + popcount(cand) <= best:
                return
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            grow(size + 1, cand & adj[v])

    grow(0, cand)
    return best


def _colourable(adj: tuple[int, ...], n: int, k: int) -> bool:
    colour = [-1] * n
    order = sorted(range(n), key=lambda v: -popcount(adj[v]))

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        forbidden = {colour[u] for u in bits(adj[v]) if colour[u] >= 0}
        # colours beyond the first unused one are symmetric; try just one of them
        for c in range(min(k, used + 1)):
            if c in forbidden:
                continue
            colour[v] = c
            if place(i + 1, max(used, c + 1)):
                return True
            colour[v] = -1
        return False

    return place(0, 0)


def _max_induced_matching(adj: tuple[int, ...], n: int) -> int:
    best = 0

    def go(cand: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + popcount(cand) // 2 <= best:
            return
        if not cand:
            return
        v = (cand & -cand).bit_length() - 1
        rest = cand & ~(1 << v)
        for w in bits(adj[v] & rest):
            blocked = adj[v] | adj[w] | 1 << v | 1 << w
            go(cand & ~blocked, size + 1)
        go(rest, size)

    go((1 << n) - 1, 0)
    return best


def invariants(g: Graph) -> GraphInvariants:
    """Chromatic number, clique number, vertex cover number and maximum induced matching.

    Exhaustive search; orders above 32 are rejected.
    """
    n = g.n
    if n > BRUTE_FORCE_CAP:
        raise ValueError(f"exact invariants are limited to n <= {BRUTE_FORCE_CAP}")
    if n == 0:
        return GraphInvariants(0, 0, 0, 0)
    adj = g.adj
    full = g.full
    omega = _max_clique(adj, full)
    co_adj = tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(adj))
    alpha = _max_clique(co_adj, full)
    chi = omega
    while not _colourable(adj, n, chi):
        chi += 1
    return GraphInvariants(chi, omega, n - alpha, _max_induced_matching(adj, n))
