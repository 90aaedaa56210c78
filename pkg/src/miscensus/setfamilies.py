"""Union-efficient set families and the binary matrices of extremal bipartite graphs.

Sets are bitmasks over the ground set {0, ..., n-1}.  A family is
union-efficient when every subfamily covering the ground set already contains
two members (possibly the same one) covering it.  That fails exactly when some
minimal cover has three or more members, which is what
:func:`is_union_efficient` searches for.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, bipartition, is_connected

GROUND_CAP = 16
MATRIX_CAP = 6


@dataclass(frozen=True)
class SetFamily:
    ground_n: int
    members: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.ground_n <= GROUND_CAP:
            raise ValueError(f"ground set size must be in 0..{GROUND_CAP}")
        full = (1 << self.ground_n) - 1
        if len(set(self.members)) != len(self.members):
            raise ValueError("family members must be distinct")
        if any(m < 0 or m & ~full for m in self.members):
            raise ValueError("member outside the ground set")

    @classmethod
    def of(cls, ground_n: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        masks = []
        for s in sets:
            m = 0
            for x in s:
                m |= 1 << x
            masks.append(m)
        return cls(ground_n, tuple(masks))

    def to_text(self) -> str:
        return "".join(f"{m:x}\n" for m in self.members)

    @classmethod
    def from_text(cls, ground_n: int, text: str) -> "SetFamily":
        return cls(ground_n, tuple(int(line, 16) for line in text.split() if line))


def _has_big_minimal_cover(members: Sequence[int], full: int) -> bool:
    # DFS over members in index order; each new member must add an element,
    # and a cover is checked for minimality (every member keeps a private element).
    m = len(members)

    def minimal(chosen: list[int]) -> bool:
        for i, a in enumerate(chosen):
            rest = 0
            for j, b in enumerate(chosen):
                if j != i:
                    rest |= b
            if a & ~rest == 0:
                return False
        return True

    def go(start: int, chosen: list[int], union: int) -> bool:
        for i in range(start, m):
            a = members[i]
            if a & ~union == 0:
                continue
            u = union | a
            chosen.append(a)
            if u == full:
                if len(chosen) >= 3 and minimal(chosen):
                    return True
            elif go(i + 1, chosen, u):
                return True
            chosen.pop()
        return False

    return go(0, [], 0)


def is_union_efficient(f: SetFamily) -> bool:
    full = (1 << f.ground_n) - 1
    return not _has_big_minimal_cover(list(f.members), full)


def is_union_efficient_direct(f: SetFamily) -> bool:
    """Check the definition directly over all subfamilies (exponential in |F|)."""
    full = (1 << f.ground_n) - 1
    members = f.members
    for r in range(1, len(members) + 1):
        for sub in combinations(members, r):
            u = 0
            for a in sub:
                u |= a
            if u != full:
                continue
            if not any(a | b == full for a, b in combinations(sub, 2)) and full not in sub:
                return False
    return True


def _family_canon(ground_n: int, members: Iterable[int]) -> tuple[int, ...]:
    members = list(members)
    best = None
    for perm in permutations(range(ground_n)):
        img = []
        for m in members:
            x = 0
            for i in range(ground_n):
                if m >> i & 1:
                    x |= 1 << perm[i]
            img.append(x)
        key = tuple(sorted(img))
        if best is None or key < best:
            best = key
    return best


def milner_family(n: int) -> SetFamily:
    """All subsets of {0..n-2} together with every subset of size >= n-1."""
    full = (1 << n) - 1
    members = set(range(1 << (n - 1)))
    members.add(full)
    members.update(full & ~(1 << i) for i in range(n))
    return SetFamily(n, tuple(sorted(members)))


@dataclass(frozen=True)
class MilnerResult:
    n: int
    max_size: int
    families_checked: int
    union_efficient: int
    extremal_classes: tuple[tuple[int, ...], ...]

    @property
    def unique(self) -> bool:
        return len(self.extremal_classes) == 1


def milner_exhaustive(n: int) -> MilnerResult:
    """Scan all 2^(2^n) families over an n-element ground set (n = 3 or 4).

    A family is encoded as a 2^n-bit integer over the subsets; it is
    union-efficient iff it contains none of the precomputed minimal covers of
    size >= 3.  Extremal families are returned as classes under ground-set
    permutations.
    """
    if n not in (3, 4):
        raise ValueError("exhaustive search is limited to n = 3 or 4")
    nsets = 1 << n
    full = nsets - 1
    bad = []
    for r in range(3, n + 1):
        for sub in combinations(range(1, nsets), r):
            u = 0
            for a in sub:
                u |= a
            if u == full:
                # every member must keep a private element
                if all(a & ~_or(b for b in sub if b != a) for a in sub):
                    code = 0
                    for a in sub:
                        code |= 1 << a
                    bad.append(code)
    families = np.arange(1 << nsets, dtype=np.uint64)
    good = np.ones(families.shape, dtype=bool)
    for code in bad:
        c = np.uint64(code)
        good &= (families & c) != c
    sizes = np.zeros(families.shape, dtype=np.int64)
    for b in range(nsets):
        sizes += ((families >> np.uint64(b)) & np.uint64(1)).astype(np.int64)
    best = int(sizes[good].max())
    winners = families[good & (sizes == best)]
    classes = set()
    for code in winners.tolist():
        members = [s for s in range(nsets) if code >> s & 1]
        classes.add(_family_canon(n, members))
    return MilnerResult(n, best, len(families), int(good.sum()), tuple(sorted(classes)))


def _or(xs: Iterable[int]) -> int:
    u = 0
    for x in xs:
        u |= x
    return u


# -- binary matrices ------------------------------------------------------------

@dataclass(frozen=True)
class BinaryMatrix:
    """k x k 0/1 matrix; bit j of ``rows[i]`` is entry (i, j)."""

    k: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.k:
            raise ValueError(f"expected {self.k} rows")
        if any(r < 0 or r >> self.k for r in self.rows):
            raise ValueError("row wider than k")

    @property
    def columns(self) -> tuple[int, ...]:
        return tuple(_or(1 << i for i, r in enumerate(self.rows) if r >> j & 1) for j in range(self.k))

    def transpose(self) -> "BinaryMatrix":
        return BinaryMatrix(self.k, self.columns)

    def to_text(self) -> str:
        return "".join("".join("1" if r >> j & 1 else "0" for j in range(self.k)) + "\n" for r in self.rows)

    @classmethod
    def from_text(cls, text: str) -> "BinaryMatrix":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        k = len(lines)
        rows = []
        for ln in lines:
            if len(ln) != k or set(ln) - {"0", "1"}:
                raise ValueError(f"row {ln!r} is not a 0/1 string of length {k}")
            rows.append(sum(1 << j for j, ch in enumerate(ln) if ch == "1"))
        return cls(k, tuple(rows))


def _pairwise_closed(sets: Sequence[int]) -> bool:
    present = set(sets)
    return all(a | b in present for a, b in combinations(sets, 2))


def matrix_conditions(m: BinaryMatrix) -> bool:
    """All-ones row and column, distinct rows and columns, rows closed under pairwise union."""
    full = (1 << m.k) - 1
    cols = m.columns
    return (
        full in m.rows
        and full in cols
        and len(set(m.rows)) == m.k
        and len(set(cols)) == m.k
        and _pairwise_closed(m.rows)
    )


def matrix_to_bipartite(m: BinaryMatrix) -> Graph:
    """Rows become vertices 0..k-1, columns k..2k-1, edge (i, k+j) iff entry (i, j) is 1."""
    if not matrix_conditions(m):
        raise ValueError("matrix violates the extremal-matrix conditions")
    k = m.k
    edges = [(i, k + j) for i, r in enumerate(m.rows) for j in range(k) if r >> j & 1]
    return Graph.from_edges(2 * k, edges)


def biadjacency(g: Graph) -> BinaryMatrix | None:
    """Reduced biadjacency matrix of a connected balanced bipartite graph, else ``None``.

    Rows follow the class holding vertex 0, columns the other class, both in
    increasing vertex order.
    """
    classes = bipartition(g)
    if classes is None or not is_connected(g):
        return None
    a, b = classes
    av = [v for v in range(g.n) if a >> v & 1]
    bv = [v for v in range(g.n) if b >> v & 1]
    if len(av) != len(bv):
        return None
    rows = tuple(_or(1 << j for j, w in enumerate(bv) if g.adj[v] >> w & 1) for v in av)
    return BinaryMatrix(len(av), rows)


def rows_union_closed_iff_cols(m: BinaryMatrix) -> tuple[bool, bool]:
    """Whether rows, resp. columns, are closed under pairwise union.

    Requires an all-ones row and column and distinct rows and columns.
    """
    full = (1 << m.k) - 1
    cols = m.columns
    if full not in m.rows or full not in cols or len(set(m.rows)) != m.k or len(set(cols)) != m.k:
        raise ValueError("needs an all-ones row and column and distinct rows and columns")
    return _pairwise_closed(m.rows), _pairwise_closed(cols)


def _perm_tables(k: int) -> list[list[int]]:
    # table[p][mask] = mask with its bits moved by permutation p
    tables = []
    for perm in permutations(range(k)):
        t = [0] * (1 << k)
        for mask in range(1, 1 << k):
            low = mask & -mask
            t[mask] = t[mask ^ low] | 1 << perm[low.bit_length() - 1]
        tables.append(t)
    return tables


def _matrix_canon(rows: Sequence[int], tables: list[list[int]]) -> tuple[int, ...]:
    return min(tuple(sorted([t[r] for r in rows])) for t in tables)


def valid_matrices(k: int, transpose: bool = True) -> list[BinaryMatrix]:
    """Representatives of the condition-satisfying k x k matrices up to isomorphism.

    Two matrices are identified under independent row and column permutations
    and, when ``transpose`` is set, under transposition (swapping the two
    classes of the bipartite graph).  Rows are a set of k masks containing the
    full row; by permuting columns the all-ones column is taken to be column 0,
    which leaves choosing k-1 further rows containing bit 0.
    """
    if not 1 <= k <= MATRIX_CAP:
        raise ValueError(f"matrix counting is limited to 1 <= k <= {MATRIX_CAP}")
    full = (1 << k) - 1
    pool = [r for r in range(1 << k) if r & 1 and r != full]
    tables = _perm_tables(k)
    seen: dict[tuple[int, ...], BinaryMatrix] = {}
    for others in combinations(pool, k - 1):
        rows = others + (full,)
        if not _pairwise_closed(rows):
            continue
        m = BinaryMatrix(k, rows)
        if len(set(m.columns)) != k:
            continue
        key = _matrix_canon(rows, tables)
        if transpose:
            key = min(key, _matrix_canon(m.columns, tables))
        if key not in seen:
            seen[key] = BinaryMatrix(k, key)
    return [seen[key] for key in sorted(seen)]


def count_valid_matrices(k: int, transpose: bool = True) -> int:
    return len(valid_matrices(k, transpose))
