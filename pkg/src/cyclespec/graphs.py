"""Bit-packed simple graphs: families, graph6 I/O, and structural decompositions.

Vertices are labeled 0..n-1 with n capped at 64 so that every adjacency
row fits a single machine word. All operations are pure; Graph values are
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError, DomainError, Graph6Error
from .rng import SplitMix64

MAX_VERTICES = 64

FAMILY_IDS = (
    "complete",
    "cycle",
    "path",
    "complete_bipartite",
    "join_clique_empty",
    "theta",
    "gnp",
    "star",
)


class Graph:
    """Immutable simple undirected graph with one bitmask adjacency row per vertex."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges=()):
        if n < 0 or n > MAX_VERTICES:
            raise CapacityError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(rows))

    @classmethod
    def from_rows(cls, n: int, rows) -> "Graph":
        """Build from adjacency rows, validating symmetry and irreflexivity."""
        if n < 0 or n > MAX_VERTICES:
            raise CapacityError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        rows = list(rows)
        if len(rows) != n:
            raise DomainError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row & ~full:
                raise DomainError(f"row {u} has bits beyond vertex {n - 1}")
            if row >> u & 1:
                raise DomainError(f"self-loop at vertex {u}")
        for u in range(n):
            m = rows[u]
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                if not rows[v] >> u & 1:
                    raise DomainError(f"asymmetric adjacency between {u} and {v}")
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(rows))
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        """Edge count."""
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def min_degree(self) -> int:
        """Minimum degree; 0 for the empty graph."""
        return min((row.bit_count() for row in self.adj), default=0)

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return mask_to_vertices(self.adj[v])

    def edges(self):
        """Yield edges (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                yield (u, v)

    def with_edge(self, u: int, v: int) -> "Graph":
        """New graph with edge (u, v) added."""
        if u == v:
            raise DomainError(f"self-loop at vertex {u}")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph.from_rows(self.n, rows)

    def without_vertex(self, v: int) -> "Graph":
        """New graph with vertex v deleted; labels above v shift down by one."""
        if not 0 <= v < self.n:
            raise DomainError(f"vertex {v} outside 0..{self.n - 1}")
        keep = [u for u in range(self.n) if u != v]
        return self.induced_subgraph(keep)

    def induced_subgraph(self, vertices) -> "Graph":
        """Subgraph induced by the given vertices, relabeled 0..k-1 in sorted order."""
        vs = sorted(set(vertices))
        pos = {u: i for i, u in enumerate(vs)}
        rows = [0] * len(vs)
        for u in vs:
            m = self.adj[u]
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                if w in pos:
                    rows[pos[u]] |= 1 << pos[w]
        return Graph.from_rows(len(vs), rows)


def mask_to_vertices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        v = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        out.append(v)
    return tuple(out)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; vertices of h are relabeled to follow those of g."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise CapacityError(f"union has {n} > {MAX_VERTICES} vertices")
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph.from_rows(n, rows)


# ---------------------------------------------------------------------------
# Graph families


@dataclass(frozen=True)
class GraphFamily:
    """Parameters naming one member of a generator family.

    Which fields are required depends on ``family``: n for complete,
    cycle, path, star and gnp; a, b for complete_bipartite; s, t for
    join_clique_empty; paths (three lengths) for theta; p (numerator,
    denominator) and seed for gnp.
    """

    family: str
    n: int | None = None
    a: int | None = None
    b: int | None = None
    s: int | None = None
    t: int | None = None
    paths: tuple[int, int, int] | None = None
    p: tuple[int, int] | None = None
    seed: int | None = None


def complete(n: int) -> Graph:
    if n < 0:
        raise DomainError("complete graph needs n >= 0")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise DomainError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise DomainError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise DomainError("complete bipartite needs a, b >= 1")
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def join_clique_empty(s: int, t: int) -> Graph:
    """K_s joined to t independent vertices: vertices 0..s-1 form the clique."""
    if s < 1 or t < 1:
        raise DomainError("join needs s, t >= 1")
    edges = [(u, v) for u in range(s) for v in range(u + 1, s)]
    edges += [(u, s + w) for u in range(s) for w in range(t)]
    return Graph(s + t, edges)


def star(n: int) -> Graph:
    """Star on n vertices: leaves 0..n-2, center n-1.

    The center carries the highest label so that label-ordered peeling
    procedures process the leaves first.
    """
    if n < 2:
        raise DomainError("star needs n >= 2")
    return Graph(n, [(v, n - 1) for v in range(n - 1)])


def theta(a: int, b: int, c: int) -> Graph:
    """Two hub vertices (0 and 1) joined by three internally disjoint paths.

    a <= b <= c are the path lengths in edges; a >= 1 and at most one
    path may have length 1 (two would be a repeated edge).
    """
    if not (1 <= a <= b <= c):
        raise DomainError("theta needs 1 <= a <= b <= c")
    if b == 1:
        raise DomainError("theta allows at most one path of length 1")
    n = a + b + c - 1
    edges = []
    nxt = 2
    for length in (a, b, c):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph(n, edges)


def gnp(n: int, p_num: int, p_den: int, seed: int) -> Graph:
    """Seeded random graph: each pair is an edge with probability p_num/p_den.

    Pairs (i, j), i < j, are decided in graph6 column order (sorted by
    (j, i)), one splitmix64 draw per pair, so identical inputs yield
    byte-identical graphs. See the README for the exact generator spec.
    """
    if n < 0:
        raise DomainError("gnp needs n >= 0")
    if p_den < 1 or not 0 <= p_num <= p_den:
        raise DomainError("gnp needs 0 <= p_num <= p_den with p_den >= 1")
    rng = SplitMix64(seed)
    edges = []
    for j in range(1, n):
        for i in range(j):
            if rng.bernoulli(p_num, p_den):
                edges.append((i, j))
    return Graph(n, edges)


def generate(spec: GraphFamily) -> Graph:
    """Build the canonical labeled instance of a family member."""

    def need(value, name):
        if value is None:
            raise DomainError(f"family {spec.family!r} requires parameter {name!r}")
        return value

    fam = spec.family
    if fam == "complete":
        return complete(need(spec.n, "n"))
    if fam == "cycle":
        return cycle(need(spec.n, "n"))
    if fam == "path":
        return path(need(spec.n, "n"))
    if fam == "star":
        return star(need(spec.n, "n"))
    if fam == "complete_bipartite":
        return complete_bipartite(need(spec.a, "a"), need(spec.b, "b"))
    if fam == "join_clique_empty":
        return join_clique_empty(need(spec.s, "s"), need(spec.t, "t"))
    if fam == "theta":
        a, b, c = need(spec.paths, "paths")
        return theta(a, b, c)
    if fam == "gnp":
        num, den = need(spec.p, "p")
        return gnp(need(spec.n, "n"), num, den, need(spec.seed, "seed"))
    raise DomainError(f"unknown family {fam!r}")


# ---------------------------------------------------------------------------
# graph6 encoding
#
# Size header: byte 63+n for n <= 62; '~' plus three bytes holding an
# 18-bit big-endian value for n in {63, 64} (larger sizes rejected).
# Body: upper-triangle bits in column order x(0,1), x(0,2), x(1,2),
# x(0,3), ..., packed six per byte MSB-first, each byte offset by 63,
# zero-padded to a byte boundary.


def write_graph6(g: Graph) -> str:
    if g.n <= 62:
        header = chr(63 + g.n)
    else:
        header = "~" + "".join(
            chr(63 + (g.n >> shift & 63)) for shift in (12, 6, 0)
        )
    bits = []
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            bits.append(col >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    body = "".join(
        chr(63 + (bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3
                  | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5]))
        for k in range(0, len(bits), 6)
    )
    return header + body


def parse_graph6(text) -> Graph:
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII byte in graph6 input", offset=exc.start) from None
    else:
        data = bytes(text)
    data = data.rstrip(b"\r\n")
    if not data:
        raise Graph6Error("empty graph6 input", offset=0)
    for k, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte} out of graph6 range at offset {k}", offset=k)
    if data[0] == 126:  # '~' long form
        if len(data) < 4:
            raise Graph6Error("truncated long-form size header", offset=len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        if n > MAX_VERTICES:
            raise Graph6Error(f"graph6 header declares n={n} > {MAX_VERTICES}", offset=1)
        if n < 63:
            raise Graph6Error(f"non-canonical long-form header for n={n}", offset=0)
        body_start = 4
    else:
        n = data[0] - 63
        body_start = 1
    nbits = n * (n - 1) // 2
    expected = body_start + (nbits + 5) // 6
    if len(data) != expected:
        raise Graph6Error(
            f"graph6 body length {len(data) - body_start} bytes, expected {expected - body_start}",
            offset=min(len(data), expected),
        )
    rows = [0] * n
    t = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[body_start + t // 6] - 63
            if byte >> (5 - t % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            t += 1
    # reject nonzero padding so that parse and write stay mutually inverse
    while t % 6:
        byte = data[body_start + t // 6] - 63
        if byte >> (5 - t % 6) & 1:
            raise Graph6Error("nonzero padding bits", offset=body_start + t // 6)
        t += 1
    return Graph.from_rows(n, rows)


# ---------------------------------------------------------------------------
# Connectivity and blocks


def _reach(adj, start: int, within: int) -> int:
    """Bitmask of vertices reachable from start inside the mask ``within``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= adj[v] & within
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Connected components as sorted vertex tuples, ordered by smallest vertex."""
    left = (1 << g.n) - 1
    parts = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = _reach(g.adj, v, left)
        parts.append(mask_to_vertices(comp))
        left &= ~comp
    return tuple(parts)


def omega(g: Graph) -> int:
    """Number of connected components."""
    return len(components(g))


def connectify(g: Graph) -> Graph:
    """Add the minimum number of edges to connect the graph.

    One bridge per gap: the smallest vertex of component i is joined to
    the smallest vertex of component i+1 (components ordered by smallest
    vertex), which fixes the result deterministically.
    """
    parts = components(g)
    rows = list(g.adj)
    for a, b in zip(parts, parts[1:]):
        u, v = a[0], b[0]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph.from_rows(g.n, rows)


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def bipartition(g: Graph):
    """Two color-class bitmasks if the graph is bipartite, else None."""
    color = {}
    sides = [0, 0]
    for s in range(g.n):
        if s in color:
            continue
        color[s] = 0
        sides[0] |= 1 << s
        queue = [s]
        while queue:
            u = queue.pop()
            cu = color[u]
            m = g.adj[u]
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                if v not in color:
                    color[v] = cu ^ 1
                    sides[cu ^ 1] |= 1 << v
                    queue.append(v)
                elif color[v] == cu:
                    return None
    return (sides[0], sides[1])


@dataclass(frozen=True)
class BlockDecomposition:
    """Cut vertices and blocks (maximal 2-connected pieces, bridges, isolated vertices).

    Every edge lies in exactly one block; two blocks share at most one
    vertex and any shared vertex is a cut vertex; the blocks cover V.
    """

    cut_vertices: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Lowpoint DFS block decomposition; blocks in discovery order, vertices sorted."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cuts = set()
    blocks = []
    edge_stack = []
    timer = 0

    for root in range(n):
        if disc[root] != -1:
            continue
        if g.adj[root] == 0:
            blocks.append((root,))
            disc[root] = timer
            timer += 1
            continue
        stack = [(root, iter(mask_to_vertices(g.adj[root])))]
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                if disc[v] == -1:
                    parent[v] = u
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((v, iter(mask_to_vertices(g.adj[v]))))
                    advanced = True
                    break
                if v != parent[u] and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    low[u] = min(low[u], disc[v])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if low[u] >= disc[p]:
                    verts = set()
                    while True:
                        a, b = edge_stack.pop()
                        verts.add(a)
                        verts.add(b)
                        if (a, b) == (p, u):
                            break
                    blocks.append(tuple(sorted(verts)))
                    if p != root or root_children > 1:
                        cuts.add(p)
        if root_children > 1:
            cuts.add(root)
    return BlockDecomposition(tuple(sorted(cuts)), tuple(blocks))


def cut_vertices(g: Graph) -> tuple[int, ...]:
    return block_decomposition(g).cut_vertices
