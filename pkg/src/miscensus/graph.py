"""Graphs on vertex set {0, ..., n-1} stored as per-vertex neighbourhood bitmasks.

A vertex set is a plain ``int`` bitmask (bit ``v`` set means vertex ``v`` is in
the set), so unions, intersections and subset tests are bitwise operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

DEFAULT_CAP = 512
WORD = 64


class GraphError(ValueError):
    """Raised for graphs that violate the representation invariants."""


class Graph6Error(ValueError):
    """A graph6 line could not be decoded; ``offset`` is the byte position, ``line`` 1-based if known."""

    def __init__(self, reason: str, offset: int, line: int | None = None):
        where = f"line {line}, byte {offset}" if line is not None else f"byte {offset}"
        super().__init__(f"{reason} ({where})")
        self.reason = reason
        self.offset = offset
        self.line = line


def round_cap(n: int) -> int:
    """Smallest multiple of the bitset word size that holds ``n`` vertices."""
    return max(WORD, -(-n // WORD) * WORD)


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True, slots=True)
class Graph:
    """Undirected simple graph of order ``n``.

    ``adj[v]`` is the open neighbourhood of ``v`` as a bitmask.  Construction
    validates symmetry, absence of loops and that no bit at or above ``n`` is
    set.  ``cap`` bounds the order; callers that legitimately need more room
    pass ``cap=round_cap(n)``.
    """

    n: int
    adj: tuple[int, ...]

    def __init__(self, n: int, adj: Iterable[int], cap: int | None = None):
        adj = tuple(adj)
        limit = DEFAULT_CAP if cap is None else cap
        if n < 0:
            raise GraphError("order must be non-negative")
        if n > limit:
            raise GraphError(f"order {n} exceeds vertex cap {limit}")
        if len(adj) != n:
            raise GraphError(f"expected {n} neighbourhoods, got {len(adj)}")
        full = (1 << n) - 1
        for v, nb in enumerate(adj):
            if nb < 0 or nb & ~full:
                raise GraphError(f"vertex {v} has neighbours outside 0..{n - 1}")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not adj[u] >> v & 1:
                    raise GraphError(f"edge {v}-{u} is not symmetric")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # Skips validation; only for adjacency built symmetric by construction.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], cap: int | None = None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for order {n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, cap=cap)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v] & ((1 << v) - 1))]

    @property
    def num_edges(self) -> int:
        return sum(popcount(nb) for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def induced(self, mask: int) -> "Graph":
        """Subgraph induced by ``mask``, vertices renumbered in increasing order."""
        keep = list(bits(mask))
        pos = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            nb = 0
            for u in bits(self.adj[v] & mask):
                nb |= 1 << pos[u]
            adj.append(nb)
        return Graph._trusted(len(keep), tuple(adj))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling must be a permutation of the vertices")
        adj = [0] * self.n
        for v in range(self.n):
            nb = 0
            for u in bits(self.adj[v]):
                nb |= 1 << perm[u]
            adj[perm[v]] = nb
        return Graph._trusted(self.n, tuple(adj))

    def components(self) -> list[int]:
        """Vertex masks of the connected components, ordered by lowest vertex."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, g6={to_graph6(self)!r})"


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(nb << offset for nb in g.adj)
        offset += g.n
    return Graph._trusted(offset, tuple(adj))


# -- graph6 -----------------------------------------------------------------

_HEADER = ">>graph6<<"
_G6_BYTES = bytes(range(63, 127))
_PAIRS: dict[int, list[tuple[int, int]]] = {}


def _pairs(n: int) -> list[tuple[int, int]]:
    # Column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    p = _PAIRS.get(n)
    if p is None:
        p = [(i, j) for j in range(1, n) for i in range(j)]
        if n <= 64:
            _PAIRS[n] = p
    return p


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def parse_graph6(text: str | bytes, cap: int = DEFAULT_CAP) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` header is accepted)."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    start = 0
    if s.startswith(_HEADER):
        start = len(_HEADER)
    if start >= len(s):
        raise Graph6Error("empty graph6 line", start)
    if s[start] == ":" or s[start] == ";":
        raise Graph6Error("sparse6 input is not supported, only graph6", start)
    if s[start] == "&":
        raise Graph6Error("digraph6 input is not supported, only graph6", start)
    raw = s.encode("ascii", errors="replace")
    if raw.translate(None, _G6_BYTES):
        for pos in range(start, len(raw)):
            if not 63 <= raw[pos] <= 126:
                raise Graph6Error(f"byte {s[pos]!r} outside graph6 range 63..126", pos)
    data = [c - 63 for c in raw]

    pos = start
    if data[pos] != 63:
        n = data[pos]
        pos += 1
    else:
        width = 3
        pos += 1
        if pos < len(s) and data[pos] == 63:
            width = 6
            pos += 1
        if pos + width > len(s):
            raise Graph6Error("truncated order header", len(s))
        n = 0
        for c in data[pos:pos + width]:
            n = n << 6 | c
        pos += width
    if n > cap:
        raise Graph6Error(f"order {n} exceeds vertex cap {cap}", start)

    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = data[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated edge data: need {nbytes} bytes, have {len(body)}", len(s))
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after edge data", pos + nbytes)

    val = 0
    for c in body:
        val = val << 6 | c
    pad = nbytes * 6 - nbits
    if val & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits", len(s) - 1)
    val >>= pad
    adj = [0] * n
    pairs = _pairs(n)
    top = nbits - 1
    # bit k (from the least significant end) is pair number top - k
    while val:
        low = val & -val
        i, j = pairs[top - (low.bit_length() - 1)]
        adj[i] |= 1 << j
        adj[j] |= 1 << i
        val ^= low
    return Graph._trusted(n, tuple(adj))


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 line without header or newline."""
    n = g.n
    adj = g.adj
    val = 0
    nbits = 0
    for i, j in _pairs(n):
        val = val << 1 | (adj[i] >> j & 1)
        nbits += 1
    pad = (-nbits) % 6
    val <<= pad
    nbytes = (nbits + pad) // 6
    chunks = [chr(((val >> (6 * (nbytes - 1 - t))) & 63) + 63) for t in range(nbytes)]
    return _encode_n(n) + "".join(chunks)


def numbered_graph6_lines(
    lines: Iterable[str], cap: int = DEFAULT_CAP, first_line: int = 1
) -> Iterator[tuple[int, Graph]]:
    """Parse a graph6 stream into (line number, graph), skipping blank and ``>>`` header lines.

    Parse failures are re-raised as :class:`Graph6Error` carrying the line number.
    """
    for lineno, line in enumerate(lines, first_line):
        line = line.strip()
        if not line or line == _HEADER or (line.startswith(">>") and not line.startswith(_HEADER)):
            continue
        try:
            yield lineno, parse_graph6(line, cap=cap)
        except Graph6Error as exc:
            raise Graph6Error(exc.reason, exc.offset, lineno) from exc


def read_graph6_lines(lines: Iterable[str], cap: int = DEFAULT_CAP, first_line: int = 1) -> Iterator[Graph]:
    for _, g in numbered_graph6_lines(lines, cap, first_line):
        yield g


# -- twins ------------------------------------------------------------------

@dataclass(frozen=True)
class TwinPartition:
    """Vertices grouped by identical open neighbourhood, classes ordered by lowest vertex."""

    classes: tuple[int, ...]

    @property
    def twin_free(self) -> bool:
        return all(c & (c - 1) == 0 for c in self.classes)


def twins(g: Graph) -> TwinPartition:
    groups: dict[int, int] = {}
    for v, nb in enumerate(g.adj):
        groups[nb] = groups.get(nb, 0) | 1 << v
    return TwinPartition(tuple(sorted(groups.values(), key=lambda c: c & -c)))


def is_twin_free(g: Graph) -> bool:
    return len(set(g.adj)) == g.n


def twin_free_core(g: Graph) -> Graph:
    """Keep the lowest-indexed vertex of each twin class, repeating until twin-free."""
    while not is_twin_free(g):
        keep = 0
        for c in twins(g).classes:
            keep |= c & -c
        g = g.induced(keep)
    return g


# -- structure --------------------------------------------------------------

@dataclass(frozen=True)
class Predicates:
    connected: bool
    bipartite: bool
    classes: tuple[int, int] | None
    triangle_free: bool
    forest: bool
    tree: bool


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(g.components()) == 1


def bipartition(g: Graph) -> tuple[int, int] | None:
    """Two colour classes of a proper 2-colouring, or ``None``.

    The lowest vertex of every component goes to the first class.
    """
    side_a = side_b = 0
    for comp in g.components():
        a = 1 << ((comp & -comp).bit_length() - 1)
        b = 0
        frontier = a
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            nxt &= ~(a | b)
            if a & frontier:
                b |= nxt
            else:
                a |= nxt
            frontier = nxt
        side_a |= a
        side_b |= b
    for v in bits(side_a):
        if g.adj[v] & side_a:
            return None
    for v in bits(side_b):
        if g.adj[v] & side_b:
            return None
    return side_a, side_b


def is_triangle_free(g: Graph) -> bool:
    adj = g.adj
    for v in range(g.n):
        for u in bits(adj[v] & ((1 << v) - 1)):
            if adj[u] & adj[v]:
                return False
    return True


def predicates(g: Graph) -> Predicates:
    ncomp = len(g.components())
    connected = g.n > 0 and ncomp == 1
    classes = bipartition(g)
    forest = g.num_edges == g.n - ncomp
    return Predicates(
        connected=connected,
        bipartite=classes is not None,
        classes=classes,
        triangle_free=is_triangle_free(g),
        forest=forest,
        tree=forest and connected,
    )


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph._trusted(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def bipartite_complement(g: Graph, classes: tuple[int, int]) -> Graph:
    """Swap edges and non-edges between the two classes of a bipartition."""
    a, b = classes
    if a & b or (a | b) != g.full:
        raise GraphError("classes must partition the vertex set")
    for v in range(g.n):
        own = a if a >> v & 1 else b
        if g.adj[v] & own:
            raise GraphError(f"vertex {v} has a neighbour in its own class")
    adj = tuple((b if a >> v & 1 else a) & ~nb for v, nb in enumerate(g.adj))
    return Graph._trusted(g.n, adj)
