import pytest

import oracles
from cyclespec import (
    DomainError,
    Graph,
    complete,
    complete_bipartite,
    cycle,
    cycle_spectrum,
    find_theta,
    gnp,
    has_cycle_length,
    is_hamiltonian,
    star,
    theta,
    theta_witness_valid,
)
from cyclespec.cycles import blocks_are_trivial
from cyclespec.verify import enumerate_graphs


def test_spectrum_examples(petersen_graph):
    s = cycle_spectrum(cycle(5))
    assert s.lengths == {5} and s.girth == s.circumference == s.oc == 5 and s.ec == 0

    s = cycle_spectrum(complete_bipartite(3, 3))
    assert s.lengths == {4, 6} and s.ec == 6 and s.oc == 0

    # frozen from the independent all-simple-cycles enumeration
    s = cycle_spectrum(petersen_graph)
    assert s.lengths == {5, 6, 8, 9}
    assert s.ec == 8 and s.oc == 9 and s.girth == 5 and s.circumference == 9
    assert oracles.nx_cycle_lengths(petersen_graph) == {5, 6, 8, 9}


def test_theta_222_spectrum():
    # the three-path theta with all lengths 2: only C_4 appears
    g = theta(2, 2, 2)
    assert cycle_spectrum(g).lengths == {4}
    assert oracles.nx_cycle_lengths(g) == {4}


def test_spectrum_trivial_cases():
    assert cycle_spectrum(Graph(0)).lengths == frozenset()
    assert cycle_spectrum(Graph(2, [(0, 1)])).lengths == frozenset()
    assert cycle_spectrum(star(5)).girth == 0


def test_spectrum_matches_oracle_exhaustive():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            assert set(cycle_spectrum(g).lengths) == oracles.nx_cycle_lengths(g)


def test_spectrum_matches_oracle_random():
    for i in range(60):
        g = gnp(10, 1, 2, seed=3000 + i)
        assert set(cycle_spectrum(g).lengths) == oracles.nx_cycle_lengths(g)


def test_has_cycle_length_examples(petersen_graph):
    assert has_cycle_length(complete(4), 3)
    assert not has_cycle_length(cycle(6), 5)
    assert not has_cycle_length(petersen_graph, 7)
    with pytest.raises(DomainError):
        has_cycle_length(complete(4), 2)
    with pytest.raises(DomainError):
        has_cycle_length(complete(4), 5)


def test_targeted_agrees_with_spectrum():
    for n in range(3, 7):
        for g in enumerate_graphs(n):
            lengths = cycle_spectrum(g).lengths
            for l in range(3, n + 1):
                assert has_cycle_length(g, l) == (l in lengths)


def test_hamiltonian(petersen_graph):
    assert is_hamiltonian(complete(4))
    assert not is_hamiltonian(petersen_graph)
    assert not is_hamiltonian(star(5))
    with pytest.raises(DomainError):
        is_hamiltonian(Graph(2, [(0, 1)]))


def test_monotone_under_edge_addition():
    for i in range(10):
        g = gnp(9, 1, 3, seed=4000 + i)
        base = cycle_spectrum(g).lengths
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if not g.has_edge(u, v):
                    assert base <= cycle_spectrum(g.with_edge(u, v)).lengths
                    break  # one added edge per starting vertex keeps this fast


def test_bipartite_parity():
    from cyclespec import is_bipartite, omega

    for i in range(20):
        g = gnp(8, 1, 2, seed=5000 + i)
        if is_bipartite(g):
            assert cycle_spectrum(g).oc == 0
    # connected non-bipartite with odd girth: the shortest cycle is odd
    for n in range(3, 8):
        for g in enumerate_graphs(n):
            s = cycle_spectrum(g)
            if not is_bipartite(g) and omega(g) == 1 and s.girth % 2 == 1:
                assert s.oc >= s.girth


# theta detection


def test_theta_examples(bowtie_graph):
    chorded = cycle(4).with_edge(0, 2)
    w = find_theta(chorded)
    assert w is not None and set(w.hubs) == {0, 2}
    assert theta_witness_valid(chorded, w)

    assert find_theta(cycle(9)) is None
    assert find_theta(bowtie_graph) is None
    assert find_theta(theta(2, 2, 3)) is not None


def test_theta_methods_agree():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            a = find_theta(g, method="exhaustive")
            b = find_theta(g, method="flow")
            assert (a is None) == (b is None)
            if a is not None:
                assert theta_witness_valid(g, a)
                assert theta_witness_valid(g, b)
    for i in range(25):
        g = gnp(14, 1, 4, seed=6000 + i)
        a = find_theta(g, method="exhaustive")
        b = find_theta(g, method="flow")
        assert (a is None) == (b is None)
        if a is not None:
            assert theta_witness_valid(g, a) and theta_witness_valid(g, b)


def test_theta_absence_iff_trivial_blocks():
    # both directions of the block characterization, exhaustively
    for n in range(1, 9):
        for g in enumerate_graphs(n):
            assert (find_theta(g) is None) == blocks_are_trivial(g)


def test_theta_witness_validator_rejects_junk():
    chorded = cycle(4).with_edge(0, 2)
    w = find_theta(chorded)
    from cyclespec import ThetaWitness

    bad = ThetaWitness(hubs=w.hubs, paths=(w.paths[0], w.paths[0], w.paths[2]))
    assert not theta_witness_valid(chorded, bad)
