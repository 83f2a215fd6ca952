"""Independent oracles used to compute expected values.

Everything here deliberately avoids the package's own algorithms:
isomorphism counting goes through raw matrix enumeration (and through
the permutation cycle-index formula as a second opinion), eigenvalues
through numpy's dense symmetric solver, and cycle/block structure
through networkx.
"""

import itertools
import math

import networkx as nx
import numpy as np

from cyclespec import Graph


def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def dedup_enumeration_counts(n: int):
    """(classes, connected classes) by brute force: all 2^C(n,2) matrices,
    deduplicated under all n! vertex permutations via numpy."""
    pairs = list(itertools.combinations(range(n), 2))
    t = len(pairs)
    pair_index = {p: i for i, p in enumerate(pairs)}
    masks = np.arange(1 << t, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(t)) & 1  # (2^t, t)
    weights = 1 << np.arange(t, dtype=np.int64)

    minima = None
    for perm in itertools.permutations(range(n)):
        remap = np.empty(t, dtype=np.int64)
        for (u, v), i in pair_index.items():
            a, b = perm[u], perm[v]
            remap[i] = pair_index[(a, b) if a < b else (b, a)]
        remapped = bits[:, remap] @ weights
        minima = remapped if minima is None else np.minimum(minima, remapped)

    classes = np.unique(minima)
    connected = 0
    for mask in classes:
        G = nx.Graph()
        G.add_nodes_from(range(n))
        for (u, v), i in pair_index.items():
            if mask >> i & 1:
                G.add_edge(u, v)
        if n == 0 or nx.is_connected(G):
            connected += 1
    return len(classes), connected


def burnside_class_count(n: int) -> int:
    """Isomorphism class count from the cycle index of S_n acting on pairs."""
    pairs = list(itertools.combinations(range(n), 2))
    total = 0
    for perm in itertools.permutations(range(n)):
        seen = set()
        orbits = 0
        for u, v in pairs:
            if (u, v) in seen:
                continue
            orbits += 1
            a, b = u, v
            while True:
                seen.add((a, b) if a < b else (b, a))
                a, b = perm[a], perm[b]
                key = (a, b) if a < b else (b, a)
                if key == (u, v):
                    break
        total += 1 << orbits
    return total // math.factorial(n)


def eig_rho(g: Graph) -> float:
    """Spectral radius via numpy's dense symmetric eigensolver."""
    if g.n == 0:
        return 0.0
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return float(np.linalg.eigvalsh(a)[-1])


def nx_cycle_lengths(g: Graph) -> set[int]:
    return {len(c) for c in nx.simple_cycles(to_networkx(g))}


def nx_cut_vertices(g: Graph) -> set[int]:
    return set(nx.articulation_points(to_networkx(g)))


def nx_blocks(g: Graph) -> set[frozenset]:
    G = to_networkx(g)
    blocks = {frozenset(b) for b in nx.biconnected_components(G)}
    blocks |= {frozenset([v]) for v in G.nodes if G.degree(v) == 0}
    return blocks
