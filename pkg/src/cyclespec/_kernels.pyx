# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: canonical labeling, cycle-length search, power iteration.

Mirrors ``_kernels_py`` exactly; see that module for the contracts and
bit conventions.
"""

from libc.stdlib cimport malloc, free
from libc.math cimport sqrt, fabs

cdef extern from *:
    """
    #include <stdint.h>
    static inline int popcount64(uint64_t x) { return __builtin_popcountll(x); }
    static inline int ctz64(uint64_t x) { return __builtin_ctzll(x); }
    """
    int popcount64(unsigned long long x) nogil
    int ctz64(unsigned long long x) nogil

ctypedef unsigned long long u64

IMPLEMENTATION = "compiled"

CANONICAL_MAX_N = 12

cdef u64 _EVEN_LENGTHS = 0

def _init_masks():
    global _EVEN_LENGTHS
    cdef int l
    cdef u64 m = 0
    for l in range(4, 65, 2):
        m |= <u64>1 << (l - 3)
    _EVEN_LENGTHS = m

_init_masks()


cdef int _load_rows(object rows, int n, u64 *out) except -1:
    cdef int i
    for i in range(n):
        out[i] = <u64>rows[i]
    return 0


# ---------------------------------------------------------------------------
# canonical_key


cdef struct _Node:
    u64 sig
    unsigned short used
    unsigned char order[12]


def canonical_key(int n, rows):
    """Minimal column-major adjacency bitstring over relabelings (n <= 12)."""
    if n > 12:
        raise ValueError(f"canonical_key supports n <= 12, got {n}")
    if n <= 1:
        return 0
    cdef u64 adj[12]
    _load_rows(rows, n, adj)

    cdef int cap = 64
    cdef _Node *frontier = <_Node *> malloc(cap * sizeof(_Node))
    cdef _Node *ext = NULL
    cdef int ext_cap = 0
    cdef int fsize = 0, esize = 0
    cdef int k, i, v, u, idx, j
    cdef unsigned int col, best, pat
    cdef u64 rv, sig
    cdef unsigned short used
    cdef object key = 0

    if frontier == NULL:
        raise MemoryError()
    for v in range(n):
        frontier[v].used = <unsigned short>(1 << v)
        frontier[v].order[0] = <unsigned char>v
        frontier[v].sig = 0
    fsize = n

    try:
        for k in range(1, n):
            best = 0xFFFFFFFF
            esize = 0
            for idx in range(fsize):
                used = frontier[idx].used
                for v in range(n):
                    if used >> v & 1:
                        continue
                    rv = adj[v]
                    col = 0
                    for i in range(k):
                        col = col << 1 | <unsigned int>(rv >> frontier[idx].order[i] & 1)
                    if col > best:
                        continue
                    if col < best:
                        best = col
                        esize = 0
                    if esize + 1 > ext_cap:
                        ext = <_Node *> _regrow(ext, esize, 2 * ext_cap if ext_cap else 64)
                        ext_cap = 2 * ext_cap if ext_cap else 64
                    for i in range(k):
                        ext[esize].order[i] = frontier[idx].order[i]
                    ext[esize].order[k] = <unsigned char>v
                    ext[esize].used = used | <unsigned short>(1 << v)
                    esize += 1
            # dedup extensions whose unplaced vertices attach identically
            if esize > 1:
                for idx in range(esize):
                    sig = 0
                    used = ext[idx].used
                    for v in range(n):
                        if used >> v & 1:
                            continue
                        rv = adj[v]
                        pat = 0
                        for i in range(k + 1):
                            pat = pat << 1 | <unsigned int>(rv >> ext[idx].order[i] & 1)
                        sig = sig << (k + 1) | pat
                    ext[idx].sig = sig
                esize = _dedup(ext, esize)
            # swap frontier and ext
            if cap < esize:
                frontier = <_Node *> _regrow(frontier, 0, esize)
                cap = esize
            for idx in range(esize):
                frontier[idx] = ext[idx]
            fsize = esize
            key = key << k | <object>best
        return key
    finally:
        free(frontier)
        if ext != NULL:
            free(ext)


cdef void *_regrow(void *ptr, int keep, int new_cap) except NULL:
    """Allocate new_cap nodes, copying the first ``keep`` old ones."""
    cdef void *out = malloc(new_cap * sizeof(_Node))
    cdef int i
    if out == NULL:
        raise MemoryError()
    if ptr != NULL:
        for i in range(keep):
            (<_Node *>out)[i] = (<_Node *>ptr)[i]
        free(ptr)
    return out


cdef int _dedup(_Node *nodes, int count):
    """Keep the first node per (used, sig) state; order of survivors preserved."""
    cdef int out = 0
    cdef int i, j
    cdef bint dup
    for i in range(count):
        dup = False
        for j in range(out):
            if nodes[j].used == nodes[i].used and nodes[j].sig == nodes[i].sig:
                dup = True
                break
        if not dup:
            if out != i:
                nodes[out] = nodes[i]
            out += 1
    return out


# ---------------------------------------------------------------------------
# cycle_search


cdef u64 _reach(u64 *rows, int start, u64 within) nogil:
    cdef u64 seen = <u64>1 << start
    cdef u64 frontier = seen
    cdef u64 nxt, m
    cdef int v
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = ctz64(m)
            m &= m - 1
            nxt |= rows[v] & within
        frontier = nxt & ~seen
        seen |= frontier
    return seen


cdef bint _bipartite(u64 *rows, int start, u64 comp) nogil:
    cdef u64 color0 = <u64>1 << start
    cdef u64 color1 = 0
    cdef u64 frontier = color0
    cdef int side = 0
    cdef u64 nxt, m
    cdef int v
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = ctz64(m)
            m &= m - 1
            nxt |= rows[v] & comp
        if side == 0:
            if nxt & color0:
                return False
            frontier = nxt & ~color1
            color1 |= frontier
        else:
            if nxt & color1:
                return False
            frontier = nxt & ~color0
            color0 |= frontier
        side ^= 1
    return True


def cycle_search(int n, rows, targets):
    """Subset of ``targets`` realized as cycle lengths; see _kernels_py."""
    cdef u64 want = <u64>targets & ((<u64>1 << 62) - 1)
    if n < 3 or want == 0:
        return 0
    cdef u64 adj[64]
    _load_rows(rows, n, adj)
    cdef u64 found = 0
    with nogil:
        found = _cycle_search(n, adj, want)
    return found


cdef u64 _cycle_search(int n, u64 *adj, u64 remaining) nogil:
    cdef u64 found = 0
    cdef u64 full = (<u64>1 << n) - 1 if n < 64 else <u64>0xFFFFFFFFFFFFFFFF
    cdef int r, v, size, length, free_cnt
    cdef u64 within, comp, local, allowed, rootrow, m, vbit, avail, bit
    cdef int path[65]
    cdef u64 stack[66]
    cdef u64 pathmask
    cdef int depth

    for r in range(n):
        if remaining == 0:
            break
        within = full & ~((<u64>1 << r) - 1)
        comp = _reach(adj, r, within)
        size = popcount64(comp)
        if size < 3:
            continue
        local = remaining & ((<u64>1 << (size - 2)) - 1)
        if local and _bipartite(adj, r, comp):
            local &= _EVEN_LENGTHS
        if local == 0:
            continue
        allowed = comp & ~(<u64>1 << r)
        rootrow = adj[r]
        path[0] = r
        pathmask = <u64>1 << r
        stack[0] = rootrow & allowed
        depth = 0
        while depth >= 0:
            m = stack[depth]
            if m == 0:
                pathmask &= ~(<u64>1 << path[depth])
                depth -= 1
                continue
            vbit = m & (~m + 1)
            stack[depth] = m & ~vbit
            v = ctz64(vbit)
            length = depth + 2
            if length >= 3 and (rootrow >> v & 1) and path[1] < v:
                bit = <u64>1 << (length - 3)
                if local & bit:
                    found |= bit
                    remaining &= ~bit
                    local &= ~bit
                    if remaining == 0:
                        return found
                    if local == 0:
                        break
            avail = allowed & ~pathmask & ~vbit
            free_cnt = popcount64(avail)
            if free_cnt and (local >> (length - 2)) & ((<u64>1 << free_cnt) - 1):
                depth += 1
                path[depth] = v
                pathmask |= vbit
                stack[depth] = adj[v] & avail
    return found


# ---------------------------------------------------------------------------
# power_method


def power_method(int n, rows, double tol, long max_iter):
    """Shifted power iteration; same contract as _kernels_py.power_method."""
    cdef u64 adj[64]
    _load_rows(rows, n, adj)
    cdef double x[64]
    cdef double ax[64]
    cdef double rho = 0.0
    cdef double residual = 1e308
    cdef double norm, dev
    cdef long it = 0
    cdef int i, j
    cdef u64 m
    cdef bint converged = False

    with nogil:
        norm = 1.0 / sqrt(<double>n)
        for i in range(n):
            x[i] = norm
        while it < max_iter:
            it += 1
            rho = 0.0
            for i in range(n):
                ax[i] = 0.0
                m = adj[i]
                while m:
                    j = ctz64(m)
                    m &= m - 1
                    ax[i] += x[j]
                rho += x[i] * ax[i]
            residual = 0.0
            for i in range(n):
                dev = fabs(ax[i] - rho * x[i])
                if dev > residual:
                    residual = dev
            if residual <= tol:
                converged = True
                break
            norm = 0.0
            for i in range(n):
                ax[i] += x[i]
                norm += ax[i] * ax[i]
            norm = sqrt(norm)
            for i in range(n):
                x[i] = ax[i] / norm
    return rho, residual, it, converged
