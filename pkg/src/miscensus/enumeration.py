"""Exhaustive generation of small graphs and trees, and the minimum-imax censuses."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import kernels
from .graph import (
    Graph,
    bits,
    disjoint_union,
    is_connected,
    is_twin_free,
    parse_graph6,
    predicates,
    to_graph6,
)
from .mis import f_min_tree, imax, min_imax_connected_graph

TREE_CAP = 22
SMALL_GRAPH_CAP = 8
FOREST_CAP = 14
WITNESS_DEFAULT_MAX_N = 14


class CapExceeded(ValueError):
    """A census or generator was asked for an order beyond its exhaustive budget."""


# -- canonical form -------------------------------------------------------------

def canonical_graph(g: Graph) -> Graph:
    """Relabelled copy of ``g`` that is identical for all graphs isomorphic to ``g``."""
    lab = kernels.canonical_labelling(g.adj)
    perm = [0] * g.n
    for pos, v in enumerate(lab):
        perm[v] = pos
    return g.relabel(perm)


def canonical_form(g: Graph) -> str:
    """Canonical graph6 string of ``g``."""
    return to_graph6(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges == h.num_edges and canonical_form(g) == canonical_form(h)


# -- trees ----------------------------------------------------------------------
#
# Free trees are produced from level sequences of rooted trees (the root's
# children at level 1, and so on), walking rooted trees in reverse
# lexicographic order and keeping only canonical centre-rooted ones.


def _next_rooted(seq: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(seq: list[int]) -> tuple[list[int], list[int]]:
    # first subtree of the root (shifted up a level) and the remainder
    m = len(seq)
    for i in range(2, len(seq)):
        if seq[i] == 1:
            m = i
            break
    return [x - 1 for x in seq[1:m]], [0] + seq[m:]


def _next_free(seq: list[int]) -> list[int] | None:
    left, rest = _split(seq)
    lh, rh = max(left), max(rest)
    ok = rh >= lh
    if ok and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            ok = False
    if ok:
        return seq
    p = len(left)
    nxt = _next_rooted(seq, p)
    if nxt is not None and seq[p] > 2:
        new_left, _ = _split(nxt)
        h = max(new_left)
        tail = list(range(1, h + 2))
        nxt[-len(tail):] = tail
    return nxt


def _tree_from_levels(seq: list[int]) -> Graph:
    n = len(seq)
    adj = [0] * n
    stack: list[int] = []
    for i, lvl in enumerate(seq):
        while stack and seq[stack[-1]] >= lvl:
            stack.pop()
        if stack:
            j = stack[-1]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        stack.append(i)
    return Graph._trusted(n, tuple(adj))


def free_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on ``n`` vertices, in a fixed order."""
    if n < 1:
        return
    if n > TREE_CAP:
        raise CapExceeded(f"tree generation is limited to n <= {TREE_CAP}")
    if n <= 2:
        yield Graph._trusted(n, (0,) if n == 1 else (2, 1))
        return
    seq: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _next_free(seq)
        if seq is not None:
            yield _tree_from_levels(seq)
            seq = _next_rooted(seq)


def twin_free_trees(n: int) -> Iterator[Graph]:
    for t in free_trees(n):
        if is_twin_free(t):
            yield t


# -- small general graphs -------------------------------------------------------

def small_graphs(n: int, connected_only: bool = False) -> list[Graph]:
    """One graph per isomorphism class of order ``n`` <= 8, sorted by canonical graph6.

    Built by adding a vertex with every possible neighbourhood to each class
    of order n-1 and deduplicating canonical forms.  Connected graphs always
    have a vertex whose removal keeps them connected, so the connected case
    only extends connected graphs by non-empty neighbourhoods.
    """
    if n > SMALL_GRAPH_CAP:
        raise CapExceeded(
            f"built-in graph generation stops at n = {SMALL_GRAPH_CAP}; "
            "ingest a graph6 stream (for example from nauty's geng) for larger orders"
        )
    if n <= 0:
        return [Graph._trusted(0, ())] if n == 0 and not connected_only else []
    level = {"@": Graph._trusted(1, (0,))}
    for m in range(2, n + 1):
        nxt: dict[str, Graph] = {}
        for g in level.values():
            for s in range(1 if connected_only else 0, 1 << (m - 1)):
                adj = list(g.adj)
                for u in bits(s):
                    adj[u] |= 1 << (m - 1)
                adj.append(s)
                h = canonical_graph(Graph._trusted(m, tuple(adj)))
                key = to_graph6(h)
                if key not in nxt:
                    nxt[key] = h
        level = nxt
    return [level[k] for k in sorted(level)]


def read_graph6_file(path) -> Iterator[Graph]:
    """Graphs from a graph6 file path (``-`` for standard input, ``.gz`` accepted)."""
    import gzip
    import sys

    from .graph import read_graph6_lines

    if str(path) == "-":
        yield from read_graph6_lines(sys.stdin)
        return
    opener = gzip.open if str(path).endswith(".gz") else open
    with opener(path, "rt", encoding="ascii") as fh:
        yield from read_graph6_lines(fh)


# -- censuses -------------------------------------------------------------------

@dataclass
class CensusRow:
    """Minimum imax over one graph class at one order, with the graphs attaining it."""

    n: int
    predicate: str
    min_imax: int | None = None
    extremal_count: int = 0
    witnesses: list[str] | None = field(default=None)
    examined: int = 0

    def offer(self, value: int, g: Graph | None, keep: bool) -> None:
        self.examined += 1
        if self.min_imax is None or value < self.min_imax:
            self.min_imax = value
            self.extremal_count = 0
            if keep:
                self.witnesses = []
        if value == self.min_imax:
            self.extremal_count += 1
            if keep and g is not None:
                self.witnesses.append(canonical_form(g))

    def merge(self, other: "CensusRow") -> None:
        """Fold in a row computed over a disjoint part of the same stream."""
        self.examined += other.examined
        if other.min_imax is None:
            return
        if self.min_imax is None or other.min_imax < self.min_imax:
            self.min_imax = other.min_imax
            self.extremal_count = 0
            if self.witnesses is not None:
                self.witnesses = []
        if other.min_imax == self.min_imax:
            self.extremal_count += other.extremal_count
            if self.witnesses is not None and other.witnesses is not None:
                self.witnesses.extend(other.witnesses)

    def finish(self) -> "CensusRow":
        if self.witnesses is not None:
            self.witnesses.sort()
        return self

    def as_dict(self) -> dict:
        d = {
            "n": self.n,
            "min_imax": None if self.min_imax is None else str(self.min_imax),
            "extremal_count": self.extremal_count,
            "predicate": self.predicate,
        }
        if self.witnesses is not None:
            d["witnesses"] = list(self.witnesses)
        return d


def census_trees(n: int, witnesses: bool | None = None) -> CensusRow:
    """Minimum imax over twin-free trees of order ``n`` and how many trees attain it."""
    if not 4 <= n <= TREE_CAP:
        raise CapExceeded(f"tree census covers 4 <= n <= {TREE_CAP}")
    keep = n <= WITNESS_DEFAULT_MAX_N if witnesses is None else witnesses
    row = CensusRow(n, "tree", witnesses=[] if keep else None)
    for t in twin_free_trees(n):
        row.offer(imax(t), t, keep)
    return row.finish()


@dataclass
class GraphCensus:
    n: int
    bipartite: CensusRow
    triangle_free: CensusRow
    general: CensusRow
    graphs_read: int = 0

    def rows(self) -> list[CensusRow]:
        return [self.bipartite, self.triangle_free, self.general]


def census_graphs(source: Iterable[Graph], n: int, witnesses: bool | None = None) -> GraphCensus:
    """Minimum imax over connected twin-free graphs of order ``n`` from ``source``.

    ``source`` must hold one graph per isomorphism class; graphs of other
    orders are rejected.  Rows: connected bipartite, connected triangle-free,
    and every connected graph in the stream.
    """
    keep = n <= WITNESS_DEFAULT_MAX_N if witnesses is None else witnesses
    out = GraphCensus(
        n,
        *(
            CensusRow(n, tag, witnesses=[] if keep else None)
            for tag in ("connected-bipartite", "connected-trianglefree", "connected-general")
        ),
    )
    for g in source:
        out.graphs_read += 1
        if g.n != n:
            raise ValueError(f"graph {out.graphs_read} has order {g.n}, expected {n}")
        if not is_twin_free(g):
            continue
        p = predicates(g)
        if not p.connected:
            continue
        value = imax(g)
        out.general.offer(value, g, keep)
        if p.triangle_free:
            out.triangle_free.offer(value, g, keep)
        if p.bipartite:
            out.bipartite.offer(value, g, keep)
    for row in out.rows():
        row.finish()
    return out


def _census_chunk(args) -> GraphCensus:
    lines, first_line, n, keep = args
    from .graph import read_graph6_lines

    return census_graphs(read_graph6_lines(lines, first_line=first_line), n, keep)


def census_graph6_stream(
    lines: Iterable[str], n: int, threads: int = 1, witnesses: bool | None = None, chunk: int = 20000
) -> GraphCensus:
    """:func:`census_graphs` over a graph6 text stream, optionally fanned out to worker processes.

    Chunks are reduced by min/count and witnesses are sorted afterwards, so
    the result does not depend on ``threads``.
    """
    from concurrent.futures import ProcessPoolExecutor
    from itertools import islice

    keep = n <= WITNESS_DEFAULT_MAX_N if witnesses is None else witnesses

    def chunks():
        it = iter(lines)
        first = 1
        while True:
            block = list(islice(it, chunk))
            if not block:
                return
            yield block, first, n, keep
            first += len(block)

    total = census_graphs((), n, keep)
    if threads <= 1:
        parts = map(_census_chunk, chunks())
        for part in parts:
            _fold(total, part)
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_census_chunk, chunks()):
                _fold(total, part)
    for row in total.rows():
        row.finish()
    return total


def _fold(total: GraphCensus, part: GraphCensus) -> None:
    total.graphs_read += part.graphs_read
    for mine, theirs in zip(total.rows(), part.rows()):
        mine.merge(theirs)


def builtin_census_graphs(n: int, witnesses: bool | None = None) -> GraphCensus:
    return census_graphs(small_graphs(n, connected_only=True), n, witnesses)


# -- theorem checks -------------------------------------------------------------

@dataclass
class Check:
    """Outcome of one exhaustive verification: counts plus the first failure."""

    name: str
    n: int
    examined: int = 0
    violations: int = 0
    counterexample: dict | None = None
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def fail(self, g: Graph | None, expected, actual) -> None:
        self.violations += 1
        if self.counterexample is None:
            self.counterexample = {
                "graph6": None if g is None else to_graph6(g),
                "expected": str(expected),
                "actual": str(actual),
            }


def verify_thm1(n: int, source: Iterable[Graph] | None = None) -> Check:
    """Connected twin-free graphs of order ``n`` with k maximal independent sets have n <= 2^(k-1)+k-2.

    Equality cases must be isomorphic to the clique-plus-subsets graph.
    """
    from .constructions import clique_subset_graph

    if source is None:
        source = small_graphs(n, connected_only=True)
    chk = Check("thm1", n)
    equality = 0
    low, at_low = None, 0
    for g in source:
        if not is_twin_free(g) or not is_connected(g):
            continue
        chk.examined += 1
        k = imax(g)
        if low is None or k < low:
            low, at_low = k, 0
        if k == low:
            at_low += 1
        bound = 2 ** (k - 1) + k - 2
        if n > bound:
            chk.fail(g, f"n <= {bound}", f"n = {n}, imax = {k}")
        elif n == bound:
            equality += 1
            if not is_isomorphic(g, clique_subset_graph(k)):
                chk.fail(g, f"isomorphic to clique_subset_graph({k})", "non-isomorphic equality case")
    chk.notes["equality_cases"] = equality
    chk.notes["min_imax"] = low
    chk.notes["extremal_count"] = at_low
    chk.notes["min_imax_expected"] = min_imax_connected_graph(n) if n >= 2 else None
    return chk


def _twin_free_trees_by_order(max_n: int) -> dict[int, list[Graph]]:
    return {m: list(twin_free_trees(m)) for m in range(1, max_n + 1)}


def _partitions(n: int, max_part: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    for p in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - p, p):
            yield [p] + rest


def twin_free_forests(n: int, trees: dict[int, list[Graph]] | None = None) -> Iterator[Graph]:
    """Twin-free forests of order ``n``, one per isomorphism class.

    Components are twin-free trees taken as multisets (non-decreasing index
    within each order), with at most one isolated vertex; the union is
    re-checked for twins.
    """
    if n > FOREST_CAP:
        raise CapExceeded(f"forest census is limited to n <= {FOREST_CAP}")
    if trees is None:
        trees = _twin_free_trees_by_order(n)
    for parts in _partitions(n, n):
        if parts.count(1) > 1 or 3 in parts:
            continue
        orders = sorted(set(parts))
        choices: list[list[list[int]]] = []
        for m in orders:
            need = parts.count(m)
            choices.append(list(_multisets(len(trees[m]), need)))
        for combo in _product(choices):
            comps = [trees[m][i] for m, idxs in zip(orders, combo) for i in idxs]
            f = disjoint_union(comps)
            if is_twin_free(f):
                yield f


def _multisets(size: int, k: int, start: int = 0) -> Iterator[list[int]]:
    if k == 0:
        yield []
        return
    for i in range(start, size):
        for rest in _multisets(size, k - 1, i):
            yield [i] + rest


def _product(choices: list[list[list[int]]]) -> Iterator[list[list[int]]]:
    if not choices:
        yield []
        return
    for first in choices[0]:
        for rest in _product(choices[1:]):
            yield [first] + rest


def verify_forest_bound(n: int) -> Check:
    """Every twin-free forest of order ``n`` >= 2 has imax >= f(n-1)."""
    if n < 2:
        raise ValueError("the forest bound needs n >= 2")
    chk = Check("forests", n)
    bound = f_min_tree(n - 1)
    low = None
    for forest in twin_free_forests(n):
        chk.examined += 1
        value = imax(forest)
        low = value if low is None else min(low, value)
        if value < bound:
            chk.fail(forest, f">= {bound}", value)
    chk.notes["min_imax"] = low
    chk.notes["bound"] = bound
    return chk


def log2_floor_check(row: CensusRow) -> bool:
    """A general-row minimum must exceed log2(n)."""
    return row.min_imax is None or row.min_imax > math.log2(row.n)


def parse_stream(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line and not line.startswith(">>"):
            yield parse_graph6(line)
