"""Exact cycle-length analysis: cycle spectrum, targeted search, theta detection.

The spectrum search is a rooted DFS over simple paths with bitset
pruning; see ``kernels``. It is exact for every n up to the 64-vertex
cap. Up to roughly n = 16 it is fast in all cases; beyond that it stays
exact but the worst case (dense graphs whose spectrum has gaps near the
top) grows exponentially, since proving a length absent means exhausting
the path space.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import DomainError
from .graphs import Graph, block_decomposition, mask_to_vertices

_LENGTH_OFFSET = 3


@dataclass(frozen=True)
class CycleSpectrum:
    """Set of realized cycle lengths with derived statistics.

    girth and circumference are 0 for acyclic graphs; ec and oc are the
    longest even and odd lengths, 0 when that parity is absent.
    """

    lengths: frozenset[int]
    girth: int
    circumference: int
    ec: int
    oc: int


def _lengths_to_mask(lengths) -> int:
    mask = 0
    for l in lengths:
        mask |= 1 << (l - _LENGTH_OFFSET)
    return mask


def _mask_to_lengths(mask: int) -> frozenset[int]:
    out = []
    while mask:
        bit = mask & -mask
        mask &= mask - 1
        out.append(bit.bit_length() - 1 + _LENGTH_OFFSET)
    return frozenset(out)


def _girth_upper_bound(g: Graph) -> int | None:
    """Exact girth via BFS from every vertex; None when the graph is acyclic.

    From each root, the first non-tree edge gives a closed walk of length
    dist(u) + dist(v) + 1 which contains a cycle; minimizing over roots
    and edges is exact because a shortest cycle is detected at that
    length when rooting inside it.
    """
    best = None
    n = g.n
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if best is not None and dist[u] * 2 >= best:
                break
            m = g.adj[u]
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u] and dist[v] >= dist[u]:
                    cyc = dist[u] + dist[v] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


def cycle_spectrum(g: Graph) -> CycleSpectrum:
    """Exact set of cycle lengths present in g.

    The DFS stops early once every length in [girth, n] has been
    witnessed, which is immediate on dense graphs.
    """
    if g.n < 3:
        return CycleSpectrum(frozenset(), 0, 0, 0, 0)
    girth = _girth_upper_bound(g)
    if girth is None:
        return CycleSpectrum(frozenset(), 0, 0, 0, 0)
    targets = _lengths_to_mask(range(girth, g.n + 1))
    found = kernels.cycle_search(g.n, g.adj, targets)
    lengths = _mask_to_lengths(found)
    evens = [l for l in lengths if l % 2 == 0]
    odds = [l for l in lengths if l % 2 == 1]
    return CycleSpectrum(
        lengths=lengths,
        girth=min(lengths),
        circumference=max(lengths),
        ec=max(evens) if evens else 0,
        oc=max(odds) if odds else 0,
    )


def has_cycle_length(g: Graph, length: int) -> bool:
    """Whether g contains a cycle of exactly this length (targeted search)."""
    if not 3 <= length <= g.n:
        raise DomainError(f"cycle length {length} outside [3, {g.n}]")
    return kernels.cycle_search(g.n, g.adj, 1 << (length - _LENGTH_OFFSET)) != 0


def is_hamiltonian(g: Graph) -> bool:
    if g.n < 3:
        raise DomainError("hamiltonicity needs n >= 3")
    return has_cycle_length(g, g.n)


# ---------------------------------------------------------------------------
# Theta subgraphs


@dataclass(frozen=True)
class ThetaWitness:
    """Two hubs joined by three internally disjoint paths (vertex sequences)."""

    hubs: tuple[int, int]
    paths: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]


def find_theta(g: Graph, method: str = "auto") -> ThetaWitness | None:
    """A theta witness if one exists, else None.

    Searches hub pairs (u, v) in lexicographic order for three internally
    vertex-disjoint u-v paths. ``method`` selects the path search:
    exhaustive backtracking, vertex-split max-flow, or auto (exhaustive
    up to n = 16, flow beyond). Both must agree everywhere.
    """
    if method not in ("auto", "exhaustive", "flow"):
        raise DomainError(f"unknown method {method!r}")
    if method == "auto":
        method = "exhaustive" if g.n <= 16 else "flow"
    finder = _three_paths_exhaustive if method == "exhaustive" else _three_paths_flow
    for u in range(g.n):
        if g.degree(u) < 3:
            continue
        for v in range(u + 1, g.n):
            if g.degree(v) < 3:
                continue
            paths = finder(g, u, v)
            if paths is not None:
                return ThetaWitness(hubs=(u, v), paths=tuple(tuple(p) for p in paths))
    return None


def _three_paths_exhaustive(g: Graph, u: int, v: int):
    """Backtracking search for 3 internally disjoint u-v paths."""

    def paths_from(banned, allow_direct):
        # DFS enumeration of simple u-v paths with internals outside `banned`
        stack = [(u, 1 << u, (u,))]
        while stack:
            w, usedmask, seq = stack.pop()
            m = g.adj[w] & ~banned & ~usedmask
            if g.adj[w] >> v & 1 and (len(seq) > 1 or allow_direct):
                yield seq + (v,)
            m &= ~(1 << v)
            verts = mask_to_vertices(m)
            for x in reversed(verts):
                stack.append((x, usedmask | 1 << x, seq + (x,)))

    def extend(banned, count, allow_direct):
        if count == 0:
            return []
        for p in paths_from(banned, allow_direct):
            internals = 0
            for w in p[1:-1]:
                internals |= 1 << w
            rest = extend(banned | internals, count - 1, allow_direct and len(p) > 2)
            if rest is not None:
                return [p] + rest
        return None

    return extend(0, 3, True)


def _three_paths_flow(g: Graph, u: int, v: int):
    """Max-flow with split vertices; succeeds when 3 disjoint paths exist.

    Every vertex except the hubs is split into an in-node (2w) and an
    out-node (2w+1) joined by a unit-capacity arc, so augmenting paths
    are internally vertex disjoint; u contributes only its out-node (the
    source) and v only its in-node (the sink). Three BFS augmentations
    decide the question; the resulting unit flow decomposes greedily
    into three paths because every internal vertex carries at most one
    unit.
    """
    source, sink = 2 * u + 1, 2 * v
    cap = {}

    def add(a, b):
        cap[(a, b)] = cap.get((a, b), 0) + 1
        cap.setdefault((b, a), 0)

    for w in range(g.n):
        if w not in (u, v):
            add(2 * w, 2 * w + 1)
    for a, b in g.edges():
        for x, y in ((a, b), (b, a)):
            if x != v and y != u:
                add(2 * x + 1, 2 * y)

    adj_out = {}
    for (a, b) in cap:
        adj_out.setdefault(a, []).append(b)
    for lst in adj_out.values():
        lst.sort()
    orig = dict(cap)

    flow = 0
    for _ in range(3):
        prev = {source: None}
        queue = [source]
        head = 0
        while head < len(queue) and sink not in prev:
            a = queue[head]
            head += 1
            for b in adj_out[a]:
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            return None
        node = sink
        while prev[node] is not None:
            a = prev[node]
            cap[(a, node)] -= 1
            cap[(node, a)] += 1
            node = a
        flow += 1

    net = {arc: orig[arc] - cap[arc] for arc in orig if orig[arc] > cap[arc]}
    paths = []
    for _ in range(3):
        seq = [u]
        node = source
        while node != sink:
            for b in adj_out[node]:
                if net.get((node, b), 0) > 0:
                    net[(node, b)] -= 1
                    node = b
                    if b % 2 == 0:  # an in-node: record the vertex
                        seq.append(b // 2)
                    break
            else:
                return None  # unreachable for a valid unit flow
        paths.append(tuple(seq))
    return paths


def theta_witness_valid(g: Graph, w: ThetaWitness) -> bool:
    """Re-walk a witness against the adjacency: three internally disjoint paths."""
    u, v = w.hubs
    if len(w.paths) != 3:
        return False
    seen_internal = set()
    seen_paths = set()
    for p in w.paths:
        if len(p) < 2 or p[0] != u or p[-1] != v:
            return False
        if p in seen_paths:
            return False
        seen_paths.add(p)
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                return False
        internals = p[1:-1]
        if len(set(internals)) != len(internals):
            return False
        for x in internals:
            if x in (u, v) or x in seen_internal:
                return False
            seen_internal.add(x)
    return True


def blocks_are_trivial(g: Graph) -> bool:
    """Every block is an isolated vertex, an edge, or a cycle.

    A block on k >= 3 vertices is a cycle exactly when it is 2-regular
    in the induced subgraph; that is the structural condition equivalent
    to the absence of theta subgraphs.
    """
    dec = block_decomposition(g)
    for block in dec.blocks:
        if len(block) <= 2:
            continue
        sub = g.induced_subgraph(block)
        if any(d != 2 for d in sub.degrees()):
            return False
    return True
