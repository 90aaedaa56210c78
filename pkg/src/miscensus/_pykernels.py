"""Pure-Python kernels: pivoting MIS recursion and canonical labelling.

These work on any order (Python ints are unbounded bitsets).  The compiled
``_kernels`` module implements the same algorithms for n <= 64 and must return
identical results; ``tests/test_kernels.py`` checks that.
"""

from __future__ import annotations

from typing import Sequence


class BudgetExceeded(RuntimeError):
    """The MIS recursion visited more nodes than the caller allowed."""

    def __init__(self, budget: int):
        super().__init__(f"budget exceeded: more than {budget} recursion nodes")
        self.budget = budget


def _popcount(x: int) -> int:
    return bin(x).count("1")


class _Walker:
    __slots__ = ("closed", "budget", "nodes", "count", "limit", "found")

    def __init__(self, adj: Sequence[int], budget: int, limit: int):
        self.closed = [nb | 1 << v for v, nb in enumerate(adj)]
        self.budget = budget
        self.nodes = 0
        self.count = 0
        self.limit = limit
        self.found: list[int] = []

    def run(self, current: int, cand: int, excl: int) -> None:
        self.nodes += 1
        if self.budget and self.nodes > self.budget:
            raise BudgetExceeded(self.budget)
        if not cand:
            if not excl:
                self.count += 1
                if len(self.found) < self.limit:
                    self.found.append(current)
            return
        closed = self.closed
        # Pivot: vertex of cand|excl whose closed neighbourhood meets cand least.
        best = -1
        best_hits = 1 << 30
        pool = cand | excl
        while pool:
            low = pool & -pool
            u = low.bit_length() - 1
            pool ^= low
            hits = _popcount(closed[u] & cand)
            if hits < best_hits:
                best_hits = hits
                best = u
                if hits == 0:
                    break
        branch = closed[best] & cand
        while branch:
            low = branch & -branch
            v = low.bit_length() - 1
            branch ^= low
            keep = ~closed[v]
            self.run(current | low, cand & keep, excl & keep)
            cand &= ~low
            excl |= low


def mis_count(adj: Sequence[int], budget: int = 0) -> int:
    """Number of maximal independent sets; ``budget`` 0 means unlimited."""
    n = len(adj)
    w = _Walker(adj, budget, 0)
    w.run(0, (1 << n) - 1, 0)
    return w.count


def mis_list(adj: Sequence[int], limit: int, budget: int = 0) -> tuple[int, list[int]]:
    """Count plus the first ``limit`` sets met by the recursion."""
    n = len(adj)
    w = _Walker(adj, budget, limit)
    w.run(0, (1 << n) - 1, 0)
    return w.count, w.found


# -- canonical labelling ----------------------------------------------------
#
# Individualisation-refinement: an ordered partition is refined to an
# equitable one (cells split by neighbour counts into each splitter cell,
# smaller counts first), the first non-singleton cell is individualised vertex
# by vertex, and every discrete leaf gives a labelling.  The canonical
# labelling is the leaf whose relabelled graph6 bit string is smallest.
# Vertices that are twins (open or closed) inside the target cell are swapped
# by an automorphism, so only one of them is tried.


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    s = 0
    while s < len(cells):
        smask = 0
        for v in cells[s]:
            smask |= 1 << v
        out: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault(_popcount(adj[v] & smask), []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                split = True
                for key in sorted(groups):
                    out.append(groups[key])
        if split:
            cells = out
            s = 0
        else:
            s += 1
    return cells


def _leaf_key(adj: Sequence[int], lab: Sequence[int]) -> tuple[int, ...]:
    n = len(lab)
    key = []
    for j in range(1, n):
        row = adj[lab[j]]
        col = 0
        for i in range(j):
            col = col << 1 | (row >> lab[i] & 1)
        key.append(col)
    return tuple(key)


def canonical_labelling(adj: Sequence[int]) -> list[int]:
    """Return ``lab`` with ``lab[position] = original vertex``."""
    n = len(adj)
    if n == 0:
        return []
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        if len(cells) == n:
            lab = [c[0] for c in cells]
            key = _leaf_key(adj, lab)
            if best[0] is None or key < best[0]:
                best[0] = key
                best[1] = lab
            return
        t = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[t]
        tried: list[int] = []
        for v in target:
            av = adj[v]
            if any((av & ~(1 << w)) == (adj[w] & ~(1 << v)) for w in tried):
                continue
            tried.append(v)
            rest = [w for w in target if w != v]
            search(cells[:t] + [[v], rest] + cells[t + 1:])

    search([list(range(n))])
    return best[1]
