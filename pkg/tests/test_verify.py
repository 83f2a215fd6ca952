import pytest

import oracles
from cyclespec import (
    CapacityError,
    DomainError,
    Graph,
    is_hamiltonian,
    parse_graph6,
)
from cyclespec.verify import (
    LEMMA_IDS,
    SuiteConfig,
    VerifyDomain,
    canonical_id,
    enumerate_graphs,
    enumeration_stats,
    run_suite,
    verify_lemma,
)

EXPECTED_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def test_counts_match_dedup_oracle():
    for n in range(1, 6):
        stats = enumeration_stats(n)
        classes, connected = oracles.dedup_enumeration_counts(n)
        assert stats.graph_count == classes == EXPECTED_COUNTS[n]
        assert stats.connected_count == connected


def test_counts_match_burnside_oracle():
    for n in range(1, 8):
        assert enumeration_stats(n).graph_count == oracles.burnside_class_count(n)


def test_enumeration_is_deterministic_and_distinct():
    first = [g.adj for g in enumerate_graphs(5)]
    second = [g.adj for g in enumerate_graphs(5)]
    assert first == second
    assert len(set(first)) == len(first)


def test_enumeration_capacity():
    with pytest.raises(CapacityError):
        list(enumerate_graphs(9))
    with pytest.raises(CapacityError):
        list(enumerate_graphs(0))


def test_canonical_id_aliases():
    assert canonical_id("lemma1") == "lemma1_theta_blocks"
    assert canonical_id("bondy") == "bondy_pancyclic"
    assert canonical_id("ore") == "ore"
    with pytest.raises(DomainError):
        canonical_id("nosuch")


def test_lemma2_tight_instances():
    # equality of the even-cycle edge bound at k=1: friendship-type graphs
    rep = verify_lemma("lemma2", VerifyDomain(exhaustive_min=5, exhaustive_max=5))
    assert rep.violations == 0
    tight5 = [parse_graph6(w) for w in rep.tight_witnesses]
    assert any(g.n == 5 and g.m == 6 for g in tight5)  # the bowtie
    for n in (3, 5, 7):
        rep = verify_lemma("lemma2", VerifyDomain(exhaustive_min=n, exhaustive_max=n))
        assert rep.tight_count >= 1


def test_ore_report_and_tightness():
    rep = verify_lemma("ore", VerifyDomain(exhaustive_max=6))
    assert rep.violations == 0 and rep.applicable > 0
    # the extremal case: K_4 plus a pendant vertex, 7 edges, no Hamilton cycle
    k4_edges = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    g = Graph(5, k4_edges + [(0, 4)])
    assert g.m == 7 == 3 * 4 // 2 + 1
    assert not is_hamiltonian(g)


def test_nosal_exhaustive():
    rep = verify_lemma("nosal", VerifyDomain(exhaustive_max=6))
    assert rep.violations == 0


def test_random_domain_reports():
    rep = verify_lemma("hong", VerifyDomain(samples=100, seed=7))
    assert rep.instances_checked == 100
    assert rep.applicable <= 100 and rep.violations == 0
    assert "seed=7" in rep.domain

    rep = verify_lemma("sun_das", VerifyDomain(samples=50, seed=7))
    assert rep.violations == 0
    assert rep.instances_checked > 50  # per-vertex instances


def test_random_domain_only_for_spectral_ids():
    rep = verify_lemma("ore", VerifyDomain(samples=50, seed=3))
    assert rep.instances_checked == 0 and rep.domain == "empty"


def test_run_suite_small():
    config = SuiteConfig(lemmas=LEMMA_IDS, max_n=5, samples=60, seed=11)
    result = run_suite(config)
    assert [r.lemma_id for r in result.reports] == sorted(set(LEMMA_IDS))
    assert result.total_violations == 0
    assert [s.graph_count for s in result.stats] == [1, 2, 4, 11, 34]
    for rep in result.reports:
        assert rep.witnesses == ()


def test_run_suite_empty_ids():
    result = run_suite(SuiteConfig(lemmas=(), max_n=4))
    assert result.reports == ()


def test_run_suite_thread_determinism():
    base = run_suite(SuiteConfig(lemmas=("hong", "lemma2", "nosal"), max_n=5, samples=90, seed=5, threads=1))
    threaded = run_suite(SuiteConfig(lemmas=("hong", "lemma2", "nosal"), max_n=5, samples=90, seed=5, threads=8))
    assert base.reports == threaded.reports
    assert base.stats == threaded.stats


def test_suite_rejects_oversized_range():
    with pytest.raises(CapacityError):
        run_suite(SuiteConfig(lemmas=("ore",), max_n=9))
