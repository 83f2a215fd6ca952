"""Exhaustive and randomized verification of the named lemmas and theorems.

``enumerate_graphs`` streams one representative per isomorphism class for
n <= 8, built level by level: every class on n-1 vertices is extended by
a new vertex with every possible neighborhood and the results are
deduplicated by canonical key. ``verify_lemma`` sweeps one statement over
an exhaustive range and/or a seeded random sample; ``run_suite`` does
several at once, sharing the per-graph work, and its output is
deterministic regardless of thread count (every accumulator is a sum,
and witness lists are sorted at the end).

Every statement checked here is a proven theorem, so a violation always
means an implementation bug; that is what makes the sweep useful.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .cycles import blocks_are_trivial, cycle_spectrum, find_theta, has_cycle_length
from .errors import CapacityError, DomainError
from .graphs import Graph, cut_vertices, gnp, is_bipartite, omega, write_graph6
from .rng import SplitMix64
from .spectral import DEFAULT_CMP_TOL, check_vertex_deletion, rho_of

ENUMERATION_MAX_N = 8

LEMMA_IDS = (
    "bollobas_half_window",
    "bondy_pancyclic",
    "hong",
    "lemma1_theta_blocks",
    "lemma2_even_cycle_bound",
    "lemma3_vertex_deletion",
    "nosal",
    "ore",
    "sun_das",
    "voss_zuluaga_even",
    "voss_zuluaga_odd",
)

LEMMA_ALIASES = {
    "lemma1": "lemma1_theta_blocks",
    "lemma2": "lemma2_even_cycle_bound",
    "lemma3": "lemma3_vertex_deletion",
    "bondy": "bondy_pancyclic",
    "bollobas": "bollobas_half_window",
}

# ids whose conclusion needs eigen-iterations per vertex or per graph;
# their exhaustive sweep is capped at n = 7, cycle-only ids go to n = 8
SPECTRAL_IDS = frozenset({"hong", "sun_das", "lemma3_vertex_deletion", "nosal"})

RANDOM_P_CYCLE = ((1, 4), (1, 2), (3, 4))
RANDOM_N_RANGE = (2, 30)

LEMMA2_K_VALUES = (1, 2, 3)


def canonical_id(name: str) -> str:
    ident = LEMMA_ALIASES.get(name, name)
    if ident not in LEMMA_IDS:
        raise DomainError(f"unknown lemma id {name!r}")
    return ident


@dataclass(frozen=True)
class EnumerationStats:
    n: int
    graph_count: int
    connected_count: int


@dataclass(frozen=True)
class LemmaReport:
    """Outcome of sweeping one statement over a domain of instances.

    ``instances_checked`` counts what was examined (graphs, or
    (graph, vertex) pairs for the per-vertex spectral statements, or
    (graph, k) pairs for the even-cycle edge bound); ``applicable``
    counts those meeting the hypothesis. ``witnesses`` holds up to 10
    graph6 strings of violating graphs, sorted. ``tight_count`` tracks
    equality cases of the even-cycle edge bound; ``boundary_exceptions``
    counts graphs that meet the half-window hypothesis only with
    equality and then miss a window length (reported separately, never
    as violations).
    """

    lemma_id: str
    domain: str
    instances_checked: int
    applicable: int
    violations: int
    witnesses: tuple[str, ...]
    tight_count: int = 0
    tight_witnesses: tuple[str, ...] = ()
    boundary_exceptions: int = 0


@dataclass(frozen=True)
class VerifyDomain:
    """Exhaustive n-range (skipped when max < min) plus a random sample spec."""

    exhaustive_min: int = 1
    exhaustive_max: int = 0
    samples: int = 0
    seed: int = 0


@dataclass(frozen=True)
class SuiteConfig:
    lemmas: tuple[str, ...]
    max_n: int = 7
    samples: int = 0
    seed: int = 0
    threads: int = 1
    tol: float = DEFAULT_CMP_TOL


@dataclass(frozen=True)
class SuiteResult:
    reports: tuple[LemmaReport, ...]
    stats: tuple[EnumerationStats, ...]

    @property
    def total_violations(self) -> int:
        return sum(r.violations for r in self.reports)


# ---------------------------------------------------------------------------
# Isomorph-free enumeration


@lru_cache(maxsize=None)
def _canonical_keys(n: int) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    prev = _canonical_keys(n - 1)
    new_bit = 1 << (n - 1)
    keys = set()
    for key in prev:
        rows = _key_to_rows(n - 1, key)
        for nbhd in range(1 << (n - 1)):
            cand = [row | new_bit if nbhd >> i & 1 else row for i, row in enumerate(rows)]
            cand.append(nbhd)
            keys.add(kernels.canonical_key(n, cand))
    return tuple(sorted(keys))


def _key_to_rows(n: int, key: int) -> list[int]:
    """Adjacency rows of the canonical representative encoded by a key."""
    rows = [0] * n
    shift = n * (n - 1) // 2
    for j in range(1, n):
        shift -= j
        col = key >> shift & ((1 << j) - 1)
        for i in range(j):
            if col >> (j - 1 - i) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def enumerate_graphs(n: int):
    """Yield one Graph per isomorphism class, in increasing canonical key order."""
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise CapacityError(f"enumeration supports 1 <= n <= {ENUMERATION_MAX_N}, got {n}")
    for key in _canonical_keys(n):
        yield Graph.from_rows(n, _key_to_rows(n, key))


def enumeration_stats(n: int) -> EnumerationStats:
    count = 0
    connected = 0
    for g in enumerate_graphs(n):
        count += 1
        if omega(g) == 1:
            connected += 1
    return EnumerationStats(n=n, graph_count=count, connected_count=connected)


# ---------------------------------------------------------------------------
# Per-graph shared facts


class GraphFacts:
    """Lazily computed observables shared by all checkers on one graph."""

    __slots__ = ("g", "_spectrum", "_rho", "_deletion", "_graph6", "_two_conn",
                 "_bipartite", "_theta_free", "_triangle")

    def __init__(self, g: Graph):
        self.g = g
        self._spectrum = None
        self._rho = None
        self._deletion = None
        self._graph6 = None
        self._two_conn = None
        self._bipartite = None
        self._theta_free = None
        self._triangle = None

    @property
    def spectrum(self):
        if self._spectrum is None:
            self._spectrum = cycle_spectrum(self.g)
        return self._spectrum

    @property
    def rho(self) -> float:
        if self._rho is None:
            self._rho = rho_of(self.g)
        return self._rho

    @property
    def deletion_reports(self):
        """check_vertex_deletion at every vertex, computed once per graph."""
        if self._deletion is None:
            self._deletion = tuple(
                check_vertex_deletion(self.g, v, _rho=self.rho) for v in range(self.g.n)
            )
        return self._deletion

    @property
    def graph6(self) -> str:
        if self._graph6 is None:
            self._graph6 = write_graph6(self.g)
        return self._graph6

    @property
    def two_connected(self) -> bool:
        if self._two_conn is None:
            g = self.g
            self._two_conn = g.n >= 3 and omega(g) == 1 and not cut_vertices(g)
        return self._two_conn

    @property
    def bipartite(self) -> bool:
        if self._bipartite is None:
            self._bipartite = is_bipartite(self.g)
        return self._bipartite

    @property
    def theta_free(self) -> bool:
        if self._theta_free is None:
            self._theta_free = find_theta(self.g) is None
        return self._theta_free

    @property
    def triangle(self) -> bool:
        if self._triangle is None:
            self._triangle = self.g.n >= 3 and has_cycle_length(self.g, 3)
        return self._triangle

    @property
    def hamiltonian(self) -> bool:
        return self.g.n >= 3 and self.g.n in self.spectrum.lengths

    def pancyclic(self) -> bool:
        return self.spectrum.lengths == frozenset(range(3, self.g.n + 1))

    def balanced_complete_bipartite(self) -> bool:
        g = self.g
        half = g.n // 2
        return (
            g.n >= 2 and g.n % 2 == 0
            and all(d == half for d in g.degrees())
            and self.bipartite
        )


# ---------------------------------------------------------------------------
# Checkers: each consumes facts and updates a plain accumulator dict


def _acc():
    return {"checked": 0, "applicable": 0, "violations": 0, "witnesses": [],
            "tight": 0, "tight_witnesses": [], "boundary": 0}


def _check_hong(f: GraphFacts, acc, tol):
    acc["checked"] += 1
    if f.g.n == 0 or f.g.min_degree() < 1:
        return
    acc["applicable"] += 1
    rhs = math.sqrt(2 * f.g.m - f.g.n + 1)
    if f.rho > rhs + tol:
        _violation(acc, f)


def _check_sun_das(f: GraphFacts, acc, tol):
    g = f.g
    acc["checked"] += g.n
    if g.n == 0 or g.min_degree() < 1:
        return
    acc["applicable"] += g.n
    for pair in f.deletion_reports:
        if pair.sun_das is not None and pair.sun_das.slack < -tol:
            _violation(acc, f)
            return


def _check_lemma3(f: GraphFacts, acc, tol):
    g = f.g
    acc["checked"] += g.n
    acc["applicable"] += g.n
    for pair in f.deletion_reports:
        if pair.lemma3.slack < -tol:
            _violation(acc, f)
            return


def _check_nosal(f: GraphFacts, acc, tol):
    acc["checked"] += 1
    if not f.rho > math.sqrt(f.g.m) + tol:
        return
    acc["applicable"] += 1
    if not f.triangle:
        _violation(acc, f)


def _check_ore(f: GraphFacts, acc, tol):
    acc["checked"] += 1
    if f.g.n < 3 or f.hamiltonian:
        return
    acc["applicable"] += 1
    n = f.g.n
    if f.g.m > (n - 1) * (n - 2) // 2 + 1:
        _violation(acc, f)


def _check_lemma1(f: GraphFacts, acc, tol):
    acc["checked"] += 1
    if not f.theta_free:
        return
    acc["applicable"] += 1
    if not blocks_are_trivial(f.g):
        _violation(acc, f)


def _check_lemma2(f: GraphFacts, acc, tol):
    n, m = f.g.n, f.g.m
    ec = f.spectrum.ec
    for k in LEMMA2_K_VALUES:
        acc["checked"] += 1
        if ec > 2 * k:
            continue
        acc["applicable"] += 1
        if 2 * m > (2 * k + 1) * (n - 1):
            _violation(acc, f)
        elif 2 * m == (2 * k + 1) * (n - 1):
            acc["tight"] += 1
            acc["tight_witnesses"].append(f.graph6)


def _vz_strength(f: GraphFacts) -> int:
    """Largest k with delta >= k and n >= 2k+1; 0 when below 3."""
    k = min(f.g.min_degree(), (f.g.n - 1) // 2)
    return k if k >= 3 else 0


def _check_vz_even(f: GraphFacts, acc, tol):
    acc["checked"] += 1
    k = _vz_strength(f)
    if not k or not f.two_connected:
        return
    acc["applicable"] += 1
    if f.spectrum.ec < 2 * k:
        _violation(acc, f)


def _check_vz_odd(f: GraphFacts, acc, tol):
    acc["checked"] += 1
    k = _vz_strength(f)
    if not k or not f.two_connected or f.bipartite:
        return
    acc["applicable"] += 1
    if f.spectrum.oc < 2 * k - 1:
        _violation(acc, f)


def _check_bondy(f: GraphFacts, acc, tol):
    acc["checked"] += 1
    n = f.g.n
    if n < 3 or not f.hamiltonian or 4 * f.g.m < n * n:
        return
    acc["applicable"] += 1
    if not f.pancyclic() and not f.balanced_complete_bipartite():
        _violation(acc, f)


def _check_bollobas(f: GraphFacts, acc, tol):
    acc["checked"] += 1
    n = f.g.n
    m4 = 4 * f.g.m
    if m4 < n * n:
        return
    upper = (n + 3) // 2
    window_ok = all(l in f.spectrum.lengths for l in range(3, upper + 1))
    if m4 > n * n:
        acc["applicable"] += 1
        if not window_ok:
            _violation(acc, f)
    elif not window_ok:
        acc["boundary"] += 1


def _violation(acc, f: GraphFacts):
    acc["violations"] += 1
    acc["witnesses"].append(f.graph6)


_CHECKERS = {
    "hong": _check_hong,
    "sun_das": _check_sun_das,
    "lemma3_vertex_deletion": _check_lemma3,
    "nosal": _check_nosal,
    "ore": _check_ore,
    "lemma1_theta_blocks": _check_lemma1,
    "lemma2_even_cycle_bound": _check_lemma2,
    "voss_zuluaga_even": _check_vz_even,
    "voss_zuluaga_odd": _check_vz_odd,
    "bondy_pancyclic": _check_bondy,
    "bollobas_half_window": _check_bollobas,
}


def _merge(into, other):
    into["checked"] += other["checked"]
    into["applicable"] += other["applicable"]
    into["violations"] += other["violations"]
    into["witnesses"].extend(other["witnesses"])
    into["tight"] += other["tight"]
    into["tight_witnesses"].extend(other["tight_witnesses"])
    into["boundary"] += other["boundary"]


def _exhaustive_cap(lemma_id: str) -> int:
    return 7 if lemma_id in SPECTRAL_IDS else ENUMERATION_MAX_N


def random_sample_schedule(samples: int, seed: int):
    """Deterministic (n, p_num, p_den, graph_seed) list for a sample run.

    For sample i: n is drawn uniformly from [2, 30] (one splitmix64 draw,
    reduced mod 29), p cycles through 1/4, 1/2, 3/4, and the graph seed
    is the next draw from the same stream.
    """
    rng = SplitMix64(seed)
    lo, hi = RANDOM_N_RANGE
    schedule = []
    for i in range(samples):
        n = lo + rng.next_u64() % (hi - lo + 1)
        num, den = RANDOM_P_CYCLE[i % len(RANDOM_P_CYCLE)]
        schedule.append((n, num, den, rng.next_u64()))
    return schedule


def _sweep_graphs(graphs, lemma_ids, tol):
    accs = {lid: _acc() for lid in lemma_ids}
    for g in graphs:
        f = GraphFacts(g)
        for lid in lemma_ids:
            _CHECKERS[lid](f, accs[lid], tol)
    return accs


def _finalize(lemma_id, domain, acc) -> LemmaReport:
    return LemmaReport(
        lemma_id=lemma_id,
        domain=domain,
        instances_checked=acc["checked"],
        applicable=acc["applicable"],
        violations=acc["violations"],
        witnesses=tuple(sorted(acc["witnesses"])[:10]),
        tight_count=acc["tight"],
        tight_witnesses=tuple(sorted(acc["tight_witnesses"])[:10]),
        boundary_exceptions=acc["boundary"],
    )


def verify_lemma(lemma_id: str, domain: VerifyDomain,
                 tol: float = DEFAULT_CMP_TOL, threads: int = 1) -> LemmaReport:
    """Sweep one statement over the given domain; see run_suite for batching."""
    lemma_id = canonical_id(lemma_id)
    result = run_suite(SuiteConfig(
        lemmas=(lemma_id,),
        max_n=domain.exhaustive_max,
        samples=domain.samples,
        seed=domain.seed,
        threads=threads,
        tol=tol,
    ), exhaustive_min=domain.exhaustive_min, with_stats=False)
    return result.reports[0]


def _chunks(seq, k):
    size = max(1, (len(seq) + k - 1) // k)
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def run_suite(config: SuiteConfig, exhaustive_min: int = 1, with_stats: bool = True) -> SuiteResult:
    """Run several lemma sweeps sharing the per-graph work.

    The exhaustive part covers every isomorphism class with
    exhaustive_min <= n <= max_n (per-lemma cap: 7 for the spectral
    statements, 8 for the cycle-only ones). The random part applies only
    to the spectral statements, on the seeded sample schedule. Output is
    independent of ``threads``.
    """
    lemma_ids = tuple(sorted({canonical_id(l) for l in config.lemmas}))
    if config.max_n > ENUMERATION_MAX_N:
        raise CapacityError(f"exhaustive range capped at n = {ENUMERATION_MAX_N}")
    threads = max(1, config.threads)
    totals = {lid: _acc() for lid in lemma_ids}

    for n in range(exhaustive_min, config.max_n + 1):
        ids_here = tuple(l for l in lemma_ids if n <= _exhaustive_cap(l))
        if not ids_here:
            continue
        graphs = list(enumerate_graphs(n))
        if threads == 1 or len(graphs) < 64:
            accs = _sweep_graphs(graphs, ids_here, config.tol)
            for lid in ids_here:
                _merge(totals[lid], accs[lid])
        else:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                futures = [pool.submit(_sweep_graphs, chunk, ids_here, config.tol)
                           for chunk in _chunks(graphs, threads * 4)]
                for fut in futures:
                    accs = fut.result()
                    for lid in ids_here:
                        _merge(totals[lid], accs[lid])

    random_ids = tuple(l for l in lemma_ids if l in SPECTRAL_IDS)
    if config.samples and random_ids:
        schedule = random_sample_schedule(config.samples, config.seed)
        graphs = [gnp(n, num, den, s) for (n, num, den, s) in schedule]
        if threads == 1:
            accs = _sweep_graphs(graphs, random_ids, config.tol)
            for lid in random_ids:
                _merge(totals[lid], accs[lid])
        else:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                futures = [pool.submit(_sweep_graphs, chunk, random_ids, config.tol)
                           for chunk in _chunks(graphs, threads * 4)]
                for fut in futures:
                    accs = fut.result()
                    for lid in random_ids:
                        _merge(totals[lid], accs[lid])

    reports = []
    for lid in lemma_ids:
        parts = []
        cap = min(config.max_n, _exhaustive_cap(lid))
        if cap >= exhaustive_min:
            parts.append(f"exhaustive n in [{exhaustive_min},{cap}]")
        if config.samples and lid in SPECTRAL_IDS:
            lo, hi = RANDOM_N_RANGE
            parts.append(
                f"random samples={config.samples} seed={config.seed} "
                f"n in [{lo},{hi}] p cycle 1/4,1/2,3/4"
            )
        domain = "; ".join(parts) if parts else "empty"
        reports.append(_finalize(lid, domain, totals[lid]))

    stats = ()
    if with_stats:
        stats = tuple(enumeration_stats(n) for n in range(exhaustive_min, config.max_n + 1))
    return SuiteResult(reports=tuple(reports), stats=stats)
