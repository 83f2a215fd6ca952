"""Spectral radius computation and classical spectral inequalities as predicates.

The spectral radius is obtained by power iteration on A + I starting from
the all-ones vector: the shift makes the Perron value strictly dominant in
modulus on every component the start vector touches, so the iteration
converges even on bipartite graphs where the plain spectrum is symmetric.
For disconnected graphs the limit is the maximum component value because
the start vector covers all components. Arithmetic is 64-bit floating
point throughout; equality cases of the inequalities are only ever
asserted within tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from . import kernels
from .errors import DomainError, PreconditionError
from .graphs import Graph

DEFAULT_EIG_TOL = 1e-10
DEFAULT_CMP_TOL = 1e-9

MAX_POWER_ITERATIONS = 10**6


@dataclass(frozen=True)
class SpectralResult:
    """Spectral radius estimate with convergence diagnostics.

    ``residual`` is the infinity norm of A x - rho x at termination;
    ``converged`` implies residual <= the requested tolerance.
    """

    rho: float
    residual: float
    iterations: int
    converged: bool


@dataclass(frozen=True)
class InequalityReport:
    """One evaluated inequality instance.

    ``slack`` is rhs - lhs; for the plain inequality kinds (hong,
    sun_das, lemma3) holds means slack >= -tolerance. The nosal kind is
    an implication, so holds may be true with negative slack when the
    graph contains a triangle.
    """

    kind: str
    lhs: float
    rhs: float
    slack: float
    holds: bool
    witness: int | None = None


class VertexDeletionReports(NamedTuple):
    sun_das: InequalityReport | None
    lemma3: InequalityReport


def spectral_radius(g: Graph, tol: float = DEFAULT_EIG_TOL) -> SpectralResult:
    """Largest adjacency eigenvalue of g, via shifted power iteration.

    Raises DomainError for the empty graph or a nonpositive tolerance.
    If the iteration cap (10^6) is reached first, the result is returned
    with converged=False and the caller decides what to do.
    """
    if g.n == 0:
        raise DomainError("spectral radius undefined for the empty graph")
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    rho, residual, iterations, converged = kernels.power_method(
        g.n, g.adj, tol, MAX_POWER_ITERATIONS
    )
    return SpectralResult(rho=rho, residual=residual, iterations=iterations, converged=converged)


def rho_of(g: Graph, tol: float = DEFAULT_EIG_TOL) -> float:
    """Spectral radius as a bare float; 0 for the empty graph."""
    if g.n == 0:
        return 0.0
    return spectral_radius(g, tol).rho


def join_quotient_rho(s: int, t: int) -> float:
    """Spectral radius of the join of K_s with t independent vertices.

    The join has the equitable partition (clique, independent set) with
    quotient matrix [[s-1, t], [s, 0]], whose Perron value equals the
    graph's spectral radius: the largest root of x^2 - (s-1)x - st.
    """
    if s < 1 or t < 1:
        raise DomainError("join_quotient_rho needs s >= 1 and t >= 1")
    return ((s - 1) + math.sqrt((s - 1) * (s - 1) + 4 * s * t)) / 2


def check_hong(g: Graph, tol: float = DEFAULT_CMP_TOL) -> InequalityReport:
    """Hong's bound rho <= sqrt(2m - n + 1), valid when there is no isolated vertex."""
    degs = g.degrees()
    for v, d in enumerate(degs):
        if d == 0:
            raise PreconditionError(f"vertex {v} is isolated; the bound needs minimum degree >= 1", vertex=v)
    lhs = rho_of(g)
    rhs = math.sqrt(2 * g.m - g.n + 1)
    slack = rhs - lhs
    return InequalityReport(kind="hong", lhs=lhs, rhs=rhs, slack=slack, holds=slack >= -tol)


def check_vertex_deletion(g: Graph, v: int, tol: float = DEFAULT_CMP_TOL,
                          _rho: float | None = None) -> VertexDeletionReports:
    """Both vertex-deletion inequalities at vertex v.

    sun_das: rho^2(G) - 2 d(v) + 1 <= rho^2(G - v), which requires
    minimum degree >= 1 (None is returned when the graph has an isolated
    vertex). lemma3: rho^2(G) <= rho^2(G - v) + 2 d(v), no hypothesis.
    ``_rho`` lets bulk callers reuse an already computed rho(G).
    """
    if not 0 <= v < g.n:
        raise DomainError(f"vertex {v} outside 0..{g.n - 1}")
    rho_g = rho_of(g) if _rho is None else _rho
    rho_h = rho_of(g.without_vertex(v))
    d = g.degree(v)
    sq_g = rho_g * rho_g
    sq_h = rho_h * rho_h

    lhs3 = sq_g
    rhs3 = sq_h + 2 * d
    lemma3 = InequalityReport(
        kind="lemma3", lhs=lhs3, rhs=rhs3, slack=rhs3 - lhs3,
        holds=rhs3 - lhs3 >= -tol, witness=v,
    )
    if g.min_degree() == 0:
        return VertexDeletionReports(None, lemma3)
    lhs_sd = sq_g - 2 * d + 1
    sun_das = InequalityReport(
        kind="sun_das", lhs=lhs_sd, rhs=sq_h, slack=sq_h - lhs_sd,
        holds=sq_h - lhs_sd >= -tol, witness=v,
    )
    return VertexDeletionReports(sun_das, lemma3)


def check_nosal(g: Graph, tol: float = DEFAULT_CMP_TOL) -> InequalityReport:
    """Implication: rho > sqrt(m) forces a triangle.

    Evaluated as NOT(rho > sqrt(m) + tol) OR (3 in the cycle spectrum);
    the report carries rho and sqrt(m) as lhs and rhs.
    """
    from .cycles import has_cycle_length

    lhs = rho_of(g)
    rhs = math.sqrt(g.m)
    antecedent = lhs > rhs + tol
    triangle = g.n >= 3 and has_cycle_length(g, 3)
    return InequalityReport(
        kind="nosal", lhs=lhs, rhs=rhs, slack=rhs - lhs,
        holds=(not antecedent) or triangle,
    )
