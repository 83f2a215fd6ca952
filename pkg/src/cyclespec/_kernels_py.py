"""Pure-Python kernels: canonical labeling, cycle-length search, power iteration.

This module and the compiled extension ``_kernels`` implement the same
three functions with identical semantics; ``cyclespec.kernels`` picks one
at import time. Masks use Python ints; adjacency rows are n-bit ints.

Length masks: bit k stands for cycle length k+3 (lengths 3..64).
Canonical keys: the lexicographically minimal upper-triangle adjacency
bitstring over all vertex relabelings, pairs in graph6 column order with
the first pair most significant.
"""

import math

import numpy as np

IMPLEMENTATION = "pure"

CANONICAL_MAX_N = 12

_EVEN_LENGTHS = sum(1 << (l - 3) for l in range(4, 65, 2))


def canonical_key(n, rows):
    """Minimal adjacency bitstring over relabelings, as an int (n <= 12).

    Level-by-level frontier search: keep every partial placement that
    realizes the minimal column prefix, extend all of them, and retain
    the extensions achieving the minimal next column. Placements whose
    unplaced vertices all attach identically to the placed sequence are
    interchangeable, so the frontier is deduplicated on that signature.
    """
    if n > CANONICAL_MAX_N:
        raise ValueError(f"canonical_key supports n <= {CANONICAL_MAX_N}, got {n}")
    if n <= 1:
        return 0
    frontier = [((v,), 1 << v) for v in range(n)]
    key = 0
    for k in range(1, n):
        best = -1
        ext = []
        for placed, used in frontier:
            for v in range(n):
                if used >> v & 1:
                    continue
                rv = rows[v]
                col = 0
                for u in placed:
                    col = col << 1 | (rv >> u & 1)
                if best < 0 or col < best:
                    best = col
                    ext = [(placed + (v,), used | 1 << v)]
                elif col == best:
                    ext.append((placed + (v,), used | 1 << v))
        if len(ext) > 1:
            seen = set()
            uniq = []
            for placed, used in ext:
                sig = 0
                for v in range(n):
                    if used >> v & 1:
                        continue
                    rv = rows[v]
                    pat = 0
                    for u in placed:
                        pat = pat << 1 | (rv >> u & 1)
                    sig = sig << (k + 1) | pat
                state = (used, sig)
                if state not in seen:
                    seen.add(state)
                    uniq.append((placed, used))
            ext = uniq
        frontier = ext
        key = key << k | best
    return key


def _reach_mask(rows, start, within):
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= rows[v] & within
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def _bipartite_mask(rows, start, comp):
    """Two-colorability of the subgraph induced by the mask ``comp``."""
    color0 = 1 << start
    color1 = 0
    frontier = color0
    side = 0
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
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


def cycle_search(n, rows, targets):
    """Subset of ``targets`` realized as cycle lengths; stops once all are found.

    Rooted DFS path extension: for each root r (the smallest vertex of
    any cycle it finds) simple paths over higher-numbered vertices are
    extended, and closures back to r record their length. A branch is cut
    when no wanted length fits between the current depth and the number
    of vertices still available. Bipartite components contribute even
    lengths only, so odd targets are dropped there up front.
    """
    targets &= (1 << 62) - 1
    if n < 3 or targets == 0:
        return 0
    found = 0
    remaining = targets
    full = (1 << n) - 1
    for r in range(n):
        if remaining == 0:
            break
        within = full & ~((1 << r) - 1)
        comp = _reach_mask(rows, r, within)
        size = comp.bit_count()
        if size < 3:
            continue
        local = remaining & ((1 << (size - 2)) - 1)
        if local and _bipartite_mask(rows, r, comp):
            local &= _EVEN_LENGTHS
        if local == 0:
            continue
        allowed = comp & ~(1 << r)
        rootrow = rows[r]
        path = [r]
        pathmask = 1 << r
        stack = [rootrow & allowed]
        while stack:
            m = stack[-1]
            if m == 0:
                stack.pop()
                pathmask &= ~(1 << path.pop())
                continue
            vbit = m & -m
            stack[-1] = m & ~vbit
            v = vbit.bit_length() - 1
            length = len(path) + 1
            if length >= 3 and rootrow >> v & 1 and path[1] < v:
                bit = 1 << (length - 3)
                if local & bit:
                    found |= bit
                    remaining &= ~bit
                    local &= ~bit
                    if remaining == 0:
                        return found
                    if local == 0:
                        break
            avail = allowed & ~pathmask & ~vbit
            free = avail.bit_count()
            if free and (local >> (length - 2)) & ((1 << free) - 1):
                path.append(v)
                pathmask |= vbit
                stack.append(rows[v] & avail)
    return found


def power_method(n, rows, tol, max_iter):
    """Shifted power iteration for the spectral radius of the adjacency matrix.

    Iterates x -> (A+I)x / |(A+I)x| from the uniform positive vector; the
    shift makes the dominant eigenvalue of A+I simple in modulus even on
    bipartite graphs. Returns (rho, residual, iterations, converged) with
    the residual measured as the infinity norm of A x - rho x.
    """
    a = np.zeros((n, n))
    for i in range(n):
        m = rows[i]
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            a[i, j] = 1.0
    x = np.full(n, 1.0 / math.sqrt(n))
    rho = 0.0
    residual = math.inf
    for it in range(1, max_iter + 1):
        ax = a @ x
        rho = float(x @ ax)
        residual = float(np.max(np.abs(ax - rho * x)))
        if residual <= tol:
            return rho, residual, it, True
        z = ax + x
        x = z / float(np.linalg.norm(z))
    return rho, residual, max_iter, False
