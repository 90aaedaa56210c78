# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for graphs of order at most 64 (one machine word per set).

Same algorithms and tie-breaking as ``_pykernels``; results must agree exactly.
"""

from libc.stdint cimport uint64_t
from libc.string cimport memcpy

from miscensus._pykernels import BudgetExceeded

cdef extern from *:
    """
    static inline int mc_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int mc_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int mc_popcount(unsigned long long x) nogil
    int mc_ctz(unsigned long long x) nogil

cdef enum:
    MAXN = 64

MAX_ORDER = MAXN


cdef struct Walk:
    uint64_t closed[MAXN]
    unsigned long long nodes
    unsigned long long budget
    unsigned long long count
    int aborted


cdef void _count(Walk* w, uint64_t cand, uint64_t excl) noexcept nogil:
    cdef uint64_t pool, branch, low, keep
    cdef int u, v, best, hits, best_hits
    w.nodes += 1
    if w.budget and w.nodes > w.budget:
        w.aborted = 1
        return
    if cand == 0:
        if excl == 0:
            w.count += 1
        return
    best = -1
    best_hits = 1 << 30
    pool = cand | excl
    while pool:
        u = mc_ctz(pool)
        pool &= pool - 1
        hits = mc_popcount(w.closed[u] & cand)
        if hits < best_hits:
            best_hits = hits
            best = u
            if hits == 0:
                break
    branch = w.closed[best] & cand
    while branch:
        v = mc_ctz(branch)
        low = (<uint64_t>1) << v
        branch &= branch - 1
        keep = ~w.closed[v]
        _count(w, cand & keep, excl & keep)
        if w.aborted:
            return
        cand &= ~low
        excl |= low


cdef int _load(Walk* w, adj) except -1:
    cdef int n = len(adj)
    cdef int v
    if n > MAXN:
        raise ValueError(f"compiled kernel supports at most {MAXN} vertices")
    for v in range(n):
        w.closed[v] = (<uint64_t>adj[v]) | ((<uint64_t>1) << v)
    w.nodes = 0
    w.count = 0
    w.aborted = 0
    return n


def mis_count(adj, unsigned long long budget=0):
    cdef Walk w
    cdef int n = _load(&w, adj)
    cdef uint64_t full = 0 if n == 0 else ((~(<uint64_t>0)) >> (64 - n))
    w.budget = budget
    with nogil:
        _count(&w, full, 0)
    if w.aborted:
        raise BudgetExceeded(budget)
    return w.count


cdef class _Lister:
    cdef Walk w
    cdef list found
    cdef Py_ssize_t limit

    cdef int run(self, uint64_t current, uint64_t cand, uint64_t excl) except -1:
        cdef uint64_t pool, branch, low, keep
        cdef int u, v, best, hits, best_hits
        self.w.nodes += 1
        if self.w.budget and self.w.nodes > self.w.budget:
            raise BudgetExceeded(self.w.budget)
        if cand == 0:
            if excl == 0:
                self.w.count += 1
                if len(self.found) < self.limit:
                    self.found.append(current)
            return 0
        best = -1
        best_hits = 1 << 30
        pool = cand | excl
        while pool:
            u = mc_ctz(pool)
            pool &= pool - 1
            hits = mc_popcount(self.w.closed[u] & cand)
            if hits < best_hits:
                best_hits = hits
                best = u
                if hits == 0:
                    break
        branch = self.w.closed[best] & cand
        while branch:
            v = mc_ctz(branch)
            low = (<uint64_t>1) << v
            branch &= branch - 1
            keep = ~self.w.closed[v]
            self.run(current | low, cand & keep, excl & keep)
            cand &= ~low
            excl |= low
        return 0


def mis_list(adj, Py_ssize_t limit, unsigned long long budget=0):
    cdef _Lister lister = _Lister()
    cdef int n = _load(&lister.w, adj)
    cdef uint64_t full = 0 if n == 0 else ((~(<uint64_t>0)) >> (64 - n))
    lister.w.budget = budget
    lister.found = []
    lister.limit = limit
    lister.run(0, full, 0)
    return lister.w.count, lister.found


# -- canonical labelling ------------------------------------------------------

cdef struct Part:
    int lab[MAXN]
    int start[MAXN]
    int size[MAXN]
    int ncells


cdef struct Canon:
    uint64_t adj[MAXN]
    int n
    int have_best
    uint64_t best_key[MAXN]
    int best_lab[MAXN]


cdef void _refine(Canon* c, Part* p) noexcept nogil:
    cdef Part out
    cdef int s = 0, ci, k, i, j, v, tmpv, tmpc, split, pos
    cdef uint64_t smask
    cdef int cnt[MAXN]
    cdef int verts[MAXN]
    while s < p.ncells:
        smask = 0
        for k in range(p.start[s], p.start[s] + p.size[s]):
            smask |= (<uint64_t>1) << p.lab[k]
        split = 0
        out.ncells = 0
        pos = 0
        for ci in range(p.ncells):
            if p.size[ci] == 1:
                out.lab[pos] = p.lab[p.start[ci]]
                out.start[out.ncells] = pos
                out.size[out.ncells] = 1
                out.ncells += 1
                pos += 1
                continue
            for k in range(p.size[ci]):
                v = p.lab[p.start[ci] + k]
                verts[k] = v
                cnt[k] = mc_popcount(c.adj[v] & smask)
            # stable insertion sort by count
            for i in range(1, p.size[ci]):
                tmpv = verts[i]
                tmpc = cnt[i]
                j = i - 1
                while j >= 0 and cnt[j] > tmpc:
                    verts[j + 1] = verts[j]
                    cnt[j + 1] = cnt[j]
                    j -= 1
                verts[j + 1] = tmpv
                cnt[j + 1] = tmpc
            out.start[out.ncells] = pos
            out.size[out.ncells] = 0
            for k in range(p.size[ci]):
                if k > 0 and cnt[k] != cnt[k - 1]:
                    split = 1
                    out.ncells += 1
                    out.start[out.ncells] = pos
                    out.size[out.ncells] = 0
                out.lab[pos] = verts[k]
                out.size[out.ncells] += 1
                pos += 1
            out.ncells += 1
        if split:
            # out keeps the original in-cell order where nothing split
            memcpy(p, &out, sizeof(Part))
            s = 0
        else:
            s += 1


cdef void _leaf(Canon* c, Part* p) noexcept nogil:
    cdef uint64_t key[MAXN]
    cdef uint64_t row, col
    cdef int i, j, n = c.n, cmp = 0
    for j in range(1, n):
        row = c.adj[p.lab[p.start[j]]]
        col = 0
        for i in range(j):
            col = (col << 1) | ((row >> p.lab[p.start[i]]) & 1)
        key[j] = col
    if c.have_best:
        for j in range(1, n):
            if key[j] != c.best_key[j]:
                cmp = -1 if key[j] < c.best_key[j] else 1
                break
        if cmp >= 0:
            return
    c.have_best = 1
    for j in range(1, n):
        c.best_key[j] = key[j]
    for j in range(n):
        c.best_lab[j] = p.lab[p.start[j]]


cdef void _search(Canon* c, Part* p) noexcept nogil:
    cdef Part child
    cdef int t, k, m, v, w, skip, ntried, pos
    cdef int tried[MAXN]
    cdef int target[MAXN]
    cdef int tsize
    _refine(c, p)
    if p.ncells == c.n:
        _leaf(c, p)
        return
    t = 0
    while p.size[t] == 1:
        t += 1
    tsize = p.size[t]
    for k in range(tsize):
        target[k] = p.lab[p.start[t] + k]
    ntried = 0
    for k in range(tsize):
        v = target[k]
        skip = 0
        for m in range(ntried):
            w = tried[m]
            if (c.adj[v] & ~((<uint64_t>1) << w)) == (c.adj[w] & ~((<uint64_t>1) << v)):
                skip = 1
                break
        if skip:
            continue
        tried[ntried] = v
        ntried += 1
        # cells[:t] + [[v], rest] + cells[t+1:]
        memcpy(&child, p, sizeof(Part))
        pos = p.start[t]
        child.lab[pos] = v
        pos += 1
        for m in range(tsize):
            if target[m] != v:
                child.lab[pos] = target[m]
                pos += 1
        for m in range(p.ncells - 1, t, -1):
            child.start[m + 1] = p.start[m]
            child.size[m + 1] = p.size[m]
        child.start[t] = p.start[t]
        child.size[t] = 1
        child.start[t + 1] = p.start[t] + 1
        child.size[t + 1] = tsize - 1
        child.ncells = p.ncells + 1
        _search(c, &child)


def canonical_labelling(adj):
    cdef Canon c
    cdef Part p
    cdef int n = len(adj), v
    if n > MAXN:
        raise ValueError(f"compiled kernel supports at most {MAXN} vertices")
    if n == 0:
        return []
    c.n = n
    c.have_best = 0
    for v in range(n):
        c.adj[v] = <uint64_t>adj[v]
        p.lab[v] = v
    p.start[0] = 0
    p.size[0] = n
    p.ncells = 1
    with nogil:
        _search(&c, &p)
    return [c.best_lab[v] for v in range(n)]
