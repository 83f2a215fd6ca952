import math

import pytest

import oracles
from cyclespec import (
    DomainError,
    Graph,
    PreconditionError,
    check_hong,
    check_nosal,
    check_vertex_deletion,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    gnp,
    join_clique_empty,
    join_quotient_rho,
    path,
    spectral_radius,
)
from cyclespec.verify import enumerate_graphs

TOL = 1e-8


def test_closed_forms():
    assert spectral_radius(complete(4)).rho == pytest.approx(3, abs=TOL)
    assert spectral_radius(cycle(6)).rho == pytest.approx(2, abs=TOL)
    assert spectral_radius(complete_bipartite(3, 5)).rho == pytest.approx(math.sqrt(15), abs=TOL)
    assert spectral_radius(path(3)).rho == pytest.approx(math.sqrt(2), abs=TOL)
    assert spectral_radius(path(10)).rho == pytest.approx(2 * math.cos(math.pi / 11), abs=TOL)


def test_result_invariants():
    r = spectral_radius(complete(5), tol=1e-10)
    assert r.converged and r.residual <= 1e-10
    assert 0 <= r.rho <= 4 + TOL
    empty5 = Graph(5)
    r = spectral_radius(empty5)
    assert r.rho == pytest.approx(0, abs=TOL)


def test_domain_errors():
    with pytest.raises(DomainError):
        spectral_radius(Graph(0))
    with pytest.raises(DomainError):
        spectral_radius(complete(3), tol=0)
    with pytest.raises(DomainError):
        join_quotient_rho(0, 5)


def test_disconnected_takes_max_component():
    g = disjoint_union(complete(4), cycle(5))
    assert spectral_radius(g).rho == pytest.approx(3, abs=TOL)
    # equal-rho components still converge
    g2 = disjoint_union(complete(4), complete(4))
    assert spectral_radius(g2).rho == pytest.approx(3, abs=TOL)


def test_against_eigensolver_exhaustive():
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            assert spectral_radius(g).rho == pytest.approx(oracles.eig_rho(g), abs=TOL)


def test_against_eigensolver_random():
    for i in range(40):
        g = gnp(12, 1, 2, seed=1000 + i)
        assert spectral_radius(g).rho == pytest.approx(oracles.eig_rho(g), abs=TOL)


def test_join_quotient_examples():
    assert join_quotient_rho(1, 2) == pytest.approx(math.sqrt(2), abs=1e-12)
    assert join_quotient_rho(2, 2) == pytest.approx((1 + math.sqrt(17)) / 2, abs=1e-12)
    for n in (5, 9, 30, 64):
        assert join_quotient_rho(n - 1, 1) == pytest.approx(n - 1, abs=1e-9)


def test_join_quotient_matches_power_iteration():
    for s, t in [(1, 5), (2, 2), (3, 9), (5, 20), (7, 57), (10, 10)]:
        g = join_clique_empty(s, t)
        assert spectral_radius(g).rho == pytest.approx(join_quotient_rho(s, t), abs=TOL)


def test_hong_examples():
    rep = check_hong(cycle(5))
    assert rep.holds and rep.rhs == pytest.approx(math.sqrt(6), abs=1e-12)
    rep = check_hong(complete(4))
    assert rep.holds and rep.slack == pytest.approx(0, abs=TOL)
    rep = check_hong(complete(2))
    assert rep.holds and rep.slack == pytest.approx(0, abs=TOL)


def test_hong_precondition_names_vertex():
    g = disjoint_union(complete(3), Graph(1))
    with pytest.raises(PreconditionError) as info:
        check_hong(g)
    assert info.value.vertex == 3


def test_vertex_deletion_examples():
    p3 = path(3)
    sun, lem = check_vertex_deletion(p3, 1)
    assert lem.lhs == pytest.approx(2, abs=TOL) and lem.rhs == pytest.approx(4, abs=TOL)
    assert sun.lhs == pytest.approx(-1, abs=TOL) and sun.rhs == pytest.approx(0, abs=TOL)
    assert sun.holds and lem.holds and sun.witness == 1

    k4 = complete(4)
    sun, lem = check_vertex_deletion(k4, 0)
    assert lem.lhs == pytest.approx(9, abs=TOL) and lem.rhs == pytest.approx(10, abs=TOL)
    assert lem.holds


def test_vertex_deletion_isolated_vertex_skips_sun_das():
    g = disjoint_union(complete(3), Graph(1))
    sun, lem = check_vertex_deletion(g, 0)
    assert sun is None and lem.holds
    # deleting the only vertex leaves the empty graph, rho = 0
    single = Graph(1)
    sun, lem = check_vertex_deletion(single, 0)
    assert sun is None and lem.holds
    with pytest.raises(DomainError):
        check_vertex_deletion(complete(3), 3)


def test_rho_monotone_under_deletion_and_addition():
    for i in range(15):
        g = gnp(9, 1, 2, seed=200 + i)
        rho = spectral_radius(g).rho
        for v in range(g.n):
            assert spectral_radius(g.without_vertex(v)).rho <= rho + 1e-9
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if not g.has_edge(u, v):
                    assert spectral_radius(g.with_edge(u, v)).rho >= rho - 1e-9


def test_nosal_examples():
    assert check_nosal(complete(3)).holds
    rep = check_nosal(cycle(5))
    assert rep.holds and rep.lhs <= rep.rhs + 1e-9
    rep = check_nosal(complete_bipartite(2, 2))
    assert rep.holds and rep.slack == pytest.approx(0, abs=TOL)


def test_nosal_exhaustive_small():
    # one radius per graph keeps the full n = 8 sweep affordable
    for n in range(1, 9):
        for g in enumerate_graphs(n):
            assert check_nosal(g).holds
