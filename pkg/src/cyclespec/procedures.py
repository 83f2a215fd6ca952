"""Traced pipeline procedures: degree peeling, edge-bound checks, extremal scan.

These operations replay, on concrete instances, the chain of reductions
used to force cycles of consecutive lengths from a spectral-radius
hypothesis: connect the graph, bound its edges from below via Hong's
inequality, peel low-degree vertices to a dense core, and peel cut
vertices to a 2-connected residue. Thresholds like n/8 are compared as
exact rationals (an integer degree against a Fraction), never rounded.

The per-step claims are proven in general only for astronomically large
n, so on desk-scale instances a claim may simply be false; the trace
records what happened and asserts nothing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cycles import cycle_spectrum
from .errors import DomainError, PreconditionError
from .graphs import Graph, components, connectify, cut_vertices, is_bipartite, omega
from .spectral import DEFAULT_CMP_TOL, rho_of

HYPOTHESIS_MARGIN = 1e-9


@dataclass(frozen=True)
class PeelingTrace:
    """Ordered record of vertex removals and the surviving subgraph.

    ``removals`` lists (original vertex label, degree at removal time);
    ``final`` is the surviving induced subgraph relabeled 0..k-1, with
    ``final_vertices`` giving its vertices under the original labels.
    ``final_min_degree`` and ``final_avg_degree`` are 0 for an empty
    survivor.
    """

    kind: str
    threshold: Fraction | None
    removals: tuple[tuple[int, int], ...]
    final: Graph
    final_vertices: tuple[int, ...]
    final_min_degree: int
    final_avg_degree: Fraction


def peel_low_degree(g: Graph, threshold: Fraction, order: str = "lowest") -> PeelingTrace:
    """Repeatedly remove a vertex of current degree <= threshold.

    The lowest-labeled qualifying vertex goes first (``order="highest"``
    flips the tie-break; the surviving vertex SET is the same either way,
    being the unique maximal subgraph of minimum degree > threshold).
    """
    threshold = Fraction(threshold)
    if threshold < 0:
        raise DomainError("threshold must be nonnegative")
    if order not in ("lowest", "highest"):
        raise DomainError(f"unknown removal order {order!r}")
    live = (1 << g.n) - 1
    removals = []
    while live:
        pick = None
        m = live
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            deg = (g.adj[v] & live).bit_count()
            if deg <= threshold:
                pick = (v, deg)
                if order == "lowest":
                    break
        if pick is None:
            break
        removals.append(pick)
        live &= ~(1 << pick[0])
    return _finish_trace("low_degree", threshold, g, live, removals)


def peel_cut_vertices(g: Graph) -> PeelingTrace:
    """Repeatedly remove the lowest-labeled cut vertex until none remains.

    Every component of the survivor is 2-connected or has at most two
    vertices. No order-invariance is promised here; the lowest-label rule
    is what makes the trace deterministic.
    """
    live_vertices = list(range(g.n))
    current = g
    removals = []
    while True:
        cuts = cut_vertices(current)
        if not cuts:
            break
        local = cuts[0]
        orig = live_vertices[local]
        removals.append((orig, current.degree(local)))
        del live_vertices[local]
        current = current.without_vertex(local)
    live = 0
    for v in live_vertices:
        live |= 1 << v
    return _finish_trace("cut_vertex", None, g, live, removals)


def _finish_trace(kind, threshold, g, live_mask, removals) -> PeelingTrace:
    verts = tuple(v for v in range(g.n) if live_mask >> v & 1)
    final = g.induced_subgraph(verts)
    if final.n:
        avg = Fraction(2 * final.m, final.n)
    else:
        avg = Fraction(0)
    return PeelingTrace(
        kind=kind,
        threshold=threshold,
        removals=tuple(removals),
        final=final,
        final_vertices=verts,
        final_min_degree=final.min_degree(),
        final_avg_degree=avg,
    )


# ---------------------------------------------------------------------------
# Spectral hypothesis and edge bounds


def spectral_hypothesis_bound(n: int) -> float:
    """sqrt(floor(n^2/4)), the threshold in every hypothesis check here."""
    return math.sqrt(n * n // 4)


def _hypothesis_holds(rho: float, n: int) -> bool:
    return rho > spectral_hypothesis_bound(n) + HYPOTHESIS_MARGIN


@dataclass(frozen=True)
class HongEdgeBoundReport:
    """Edge-count consequences of the spectral hypothesis.

    When rho > sqrt(floor(n^2/4)), Hong's inequality forces
    2m >= (n^2 + 4n - 5)/4 and hence average degree above n/4; both are
    checked exactly in integers. Vacuously true when the hypothesis
    fails.
    """

    rho: float
    hypothesis_holds: bool
    edge_bound_holds: bool
    avg_degree_holds: bool
    bound_holds: bool


def hong_edge_bound_check(g: Graph) -> HongEdgeBoundReport:
    for v, d in enumerate(g.degrees()):
        if d == 0:
            raise PreconditionError(f"vertex {v} is isolated; Hong's bound needs minimum degree >= 1", vertex=v)
    rho = rho_of(g)
    hyp = _hypothesis_holds(rho, g.n)
    n, m = g.n, g.m
    edge_ok = 8 * m >= n * n + 4 * n - 5
    avg_ok = 8 * m > n * n
    return HongEdgeBoundReport(
        rho=rho,
        hypothesis_holds=hyp,
        edge_bound_holds=edge_ok,
        avg_degree_holds=avg_ok,
        bound_holds=(not hyp) or (edge_ok and avg_ok),
    )


@dataclass(frozen=True)
class TheoremWindowReport:
    """Which cycle lengths in [3, floor((1/4 - eps) n)] are present.

    ``missing`` is computed regardless of the hypothesis so the report is
    informative either way; conclusion_holds is simply "missing is
    empty", vacuously true when the window is empty.
    """

    n: int
    eps: Fraction
    rho: float
    hypothesis_holds: bool
    window_upper: int
    missing: tuple[int, ...]
    conclusion_holds: bool


def theorem_window_check(g: Graph, eps) -> TheoremWindowReport:
    eps = Fraction(eps)
    if not 0 < eps < Fraction(1, 4):
        raise DomainError("eps must satisfy 0 < eps < 1/4")
    rho = rho_of(g)
    upper = math.floor((Fraction(1, 4) - eps) * g.n)
    lengths = cycle_spectrum(g).lengths
    missing = tuple(l for l in range(3, upper + 1) if l not in lengths)
    return TheoremWindowReport(
        n=g.n,
        eps=eps,
        rho=rho,
        hypothesis_holds=_hypothesis_holds(rho, g.n),
        window_upper=upper,
        missing=missing,
        conclusion_holds=not missing,
    )


# ---------------------------------------------------------------------------
# Extremal scan


@dataclass(frozen=True)
class ExtremalScanRow:
    """Smallest clique size s whose join with n-s independent vertices
    pushes the spectral radius past sqrt(floor(n^2/4)).

    The bracketing invariant (s_min - 1 fails, s_min passes) is decided
    in exact integer arithmetic; the circumference of the join with
    s <= n - s is exactly 2s, so the row reports that too.
    """

    n: int
    s_min: int
    ratio: float
    rho_at_s_min: float
    circumference: int


def join_rho_exceeds_bound(s: int, t: int) -> bool:
    """Exact test: is the join quotient value strictly above sqrt(floor(n^2/4))?

    With Q = floor(n^2/4) and n = s + t, the largest root of
    x^2 - (s-1)x - st exceeds sqrt(Q) iff (s-1) sqrt(Q) > Q - st, decided
    by integer comparisons (square both sides when Q - st >= 0).
    """
    if s < 1 or t < 1:
        raise DomainError("need s >= 1 and t >= 1")
    n = s + t
    q = n * n // 4
    d = q - s * t
    if d < 0:
        return True
    return (s - 1) * (s - 1) * q > d * d


def extremal_scan(n_values) -> list[ExtremalScanRow]:
    """Per n, locate s_min by scanning s upward with the exact quotient test.

    Works directly on the closed form, so n far beyond the 64-vertex
    graph cap is fine.
    """
    from .spectral import join_quotient_rho

    rows = []
    for n in n_values:
        if n < 8:
            raise DomainError(f"extremal scan needs n >= 8, got {n}")
        s_min = None
        for s in range(1, n):
            if join_rho_exceeds_bound(s, n - s):
                s_min = s
                break
        if s_min is None:
            raise DomainError(f"no s < n passes the spectral bound at n={n}")
        rows.append(
            ExtremalScanRow(
                n=n,
                s_min=s_min,
                ratio=2 * s_min / n,
                rho_at_s_min=join_quotient_rho(s_min, n - s_min),
                circumference=2 * s_min,
            )
        )
    return rows


# ---------------------------------------------------------------------------
# Full proof trace


@dataclass(frozen=True)
class ClaimRecord:
    """One intermediate claim: the bound claimed, the value observed, and
    whether it held. ``applicable`` is False when the claim's own
    hypothesis is not met on this instance (then holds is vacuously
    True). Boolean claims carry no numeric bound."""

    claim_id: str
    bound: float | None
    observed: float | None
    holds: bool
    applicable: bool = True


@dataclass(frozen=True)
class ProofTrace:
    """Every pipeline step executed on one instance, with claims recorded."""

    n: int
    eps: Fraction
    rho: float
    hypothesis_bound: float
    hypothesis_holds: bool
    omega_initial: int
    edges_added: int
    low_degree: PeelingTrace | None
    cut_vertex: PeelingTrace | None
    claims: tuple[ClaimRecord, ...]
    window: TheoremWindowReport | None


def proof_trace(g: Graph, eps, tol: float = DEFAULT_CMP_TOL) -> ProofTrace:
    """Run the whole reduction chain on g and record each claim's fate.

    Steps: connect the graph (the spectral radius only grows and cycle
    content is preserved), check the Hong-derived edge bounds, peel
    degrees <= n/8 to get the core H, check the even-cycle window and
    the triangle/non-bipartiteness claims on H, peel cut vertices to F,
    and check the component-count, degree, and odd-cycle claims on the
    max-rho component of F. Hypothesis-conditioned claims (the odd-cycle
    bound) are vacuous when their own hypotheses fail at this size.
    """
    eps = Fraction(eps)
    if not 0 < eps < Fraction(1, 4):
        raise DomainError("eps must satisfy 0 < eps < 1/4")
    n = g.n
    rho = rho_of(g)
    bound = spectral_hypothesis_bound(n)
    omega_initial = omega(g)
    if not _hypothesis_holds(rho, n):
        return ProofTrace(
            n=n, eps=eps, rho=rho, hypothesis_bound=bound, hypothesis_holds=False,
            omega_initial=omega_initial, edges_added=omega_initial - 1,
            low_degree=None, cut_vertex=None, claims=(), window=None,
        )

    claims = []
    gc = connectify(g)
    m = gc.m

    claims.append(ClaimRecord(
        claim_id="edge_lower_bound",
        bound=(n * n + 4 * n - 5) / 4,
        observed=float(2 * m),
        holds=8 * m >= n * n + 4 * n - 5,
    ))
    claims.append(ClaimRecord(
        claim_id="avg_degree_above_quarter",
        bound=n / 4,
        observed=2 * m / n,
        holds=8 * m > n * n,
    ))

    low = peel_low_degree(gc, Fraction(n, 8))
    h = low.final
    hn = h.n
    if hn:
        claims.append(ClaimRecord(
            claim_id="core_avg_degree",
            bound=n / 4,
            observed=float(low.final_avg_degree),
            holds=low.final_avg_degree > Fraction(n, 4),
        ))
        claims.append(ClaimRecord(
            claim_id="core_min_degree",
            bound=n / 8,
            observed=float(low.final_min_degree),
            holds=Fraction(low.final_min_degree) > Fraction(n, 8),
        ))
        spec_h = cycle_spectrum(h)
        claims.append(ClaimRecord(
            claim_id="core_even_cycle",
            bound=float(n // 4),
            observed=float(spec_h.ec),
            holds=spec_h.ec > n // 4,
        ))
        rho_h = rho_of(h)
        nosal_bound = math.sqrt(n * hn - 1) / 2
        claims.append(ClaimRecord(
            claim_id="core_rho_lower",
            bound=nosal_bound,
            observed=rho_h,
            holds=rho_h >= nosal_bound - tol,
        ))
        claims.append(ClaimRecord(
            claim_id="core_triangle",
            bound=None, observed=None,
            holds=3 in spec_h.lengths,
        ))
        claims.append(ClaimRecord(
            claim_id="core_non_bipartite",
            bound=None, observed=None,
            holds=not is_bipartite(h),
        ))
        cut = peel_cut_vertices(h)
        claims.extend(_residue_claims(n, h, rho_h, cut, tol))
    else:
        claims.append(ClaimRecord("core_avg_degree", n / 4, None, False))
        claims.append(ClaimRecord("core_min_degree", n / 8, None, False))
        claims.append(ClaimRecord("core_even_cycle", float(n // 4), None, False))
        cut = None

    window = theorem_window_check(g, eps)
    return ProofTrace(
        n=n, eps=eps, rho=rho, hypothesis_bound=bound, hypothesis_holds=True,
        omega_initial=omega_initial, edges_added=omega_initial - 1,
        low_degree=low, cut_vertex=cut, claims=tuple(claims), window=window,
    )


def _residue_claims(n, h, rho_h, cut, tol):
    """Claims about F (the cut-vertex-free residue) and its max-rho component."""
    f = cut.final
    hn = h.n
    out = []
    omega_f = omega(f) if f.n else 0
    out.append(ClaimRecord(
        claim_id="residue_component_count",
        bound=8.0,
        observed=float(omega_f),
        holds=omega_f <= 8,
    ))
    if f.n == 0:
        out.append(ClaimRecord("residue_rho_lower", None, None, False))
        return out

    drop = rho_h * rho_h - 14 * (hn - 1)
    rho_bound = math.sqrt(drop) if drop > 0 else 0.0
    comps = components(f)
    comp_graphs = [f.induced_subgraph(c) for c in comps]
    comp_rhos = [rho_of(cg) for cg in comp_graphs]
    rho_f = max(comp_rhos)
    out.append(ClaimRecord(
        claim_id="residue_rho_lower",
        bound=rho_bound,
        observed=rho_f,
        holds=rho_f >= rho_bound - tol,
    ))
    best = comp_rhos.index(rho_f)
    f1 = comp_graphs[best]
    delta1 = f1.min_degree()
    out.append(ClaimRecord(
        claim_id="survivor_min_degree",
        bound=f1.n / 8,
        observed=float(delta1),
        holds=Fraction(delta1) >= Fraction(f1.n, 8),
    ))
    non_bip = not is_bipartite(f1)
    out.append(ClaimRecord(
        claim_id="survivor_non_bipartite",
        bound=None, observed=None,
        holds=non_bip,
    ))
    # odd-cycle lower bound from minimum degree, hypothesis-conditioned:
    # needs 2-connectivity, delta >= 3, at least 2*delta+1 vertices, and
    # a non-bipartite component
    applicable = (
        delta1 >= 3
        and f1.n >= 2 * delta1 + 1
        and non_bip
        and f1.n >= 3
        and not cut_vertices(f1)
    )
    oc_bound = min(2 * delta1 - 1, f1.n)
    if applicable:
        oc1 = cycle_spectrum(f1).oc
        out.append(ClaimRecord(
            claim_id="survivor_odd_cycle",
            bound=float(oc_bound),
            observed=float(oc1),
            holds=oc1 >= oc_bound,
        ))
    else:
        out.append(ClaimRecord(
            claim_id="survivor_odd_cycle",
            bound=float(oc_bound),
            observed=None,
            holds=True,
            applicable=False,
        ))
    return out
