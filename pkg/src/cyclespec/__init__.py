"""Cycle spectra, spectral-radius inequalities, and small-graph verification.

The package is organized around three compiled-or-pure kernels (canonical
labeling, cycle-length DFS, power iteration; see ``cyclespec.kernels``)
with the domain layers on top: ``graphs`` (bit-packed graphs, families,
graph6), ``spectral`` (radius and inequality predicates), ``cycles``
(cycle spectrum and theta detection), ``procedures`` (peeling pipelines
and the extremal scan), ``verify`` (exhaustive/randomized sweeps), and
``cli``.
"""

__version__ = "0.1.0"

from .errors import CapacityError, DomainError, Graph6Error, PreconditionError
from .graphs import (
    BlockDecomposition,
    Graph,
    GraphFamily,
    block_decomposition,
    complete,
    complete_bipartite,
    components,
    connectify,
    cut_vertices,
    cycle,
    disjoint_union,
    generate,
    gnp,
    is_bipartite,
    join_clique_empty,
    omega,
    parse_graph6,
    path,
    star,
    theta,
    write_graph6,
)
from .spectral import (
    InequalityReport,
    SpectralResult,
    check_hong,
    check_nosal,
    check_vertex_deletion,
    join_quotient_rho,
    spectral_radius,
)
from .cycles import (
    CycleSpectrum,
    ThetaWitness,
    cycle_spectrum,
    find_theta,
    has_cycle_length,
    is_hamiltonian,
    theta_witness_valid,
)
from .procedures import (
    ExtremalScanRow,
    HongEdgeBoundReport,
    PeelingTrace,
    ProofTrace,
    TheoremWindowReport,
    extremal_scan,
    hong_edge_bound_check,
    peel_cut_vertices,
    peel_low_degree,
    proof_trace,
    theorem_window_check,
)
from .verify import (
    EnumerationStats,
    LemmaReport,
    SuiteConfig,
    SuiteResult,
    VerifyDomain,
    enumerate_graphs,
    enumeration_stats,
    run_suite,
    verify_lemma,
)
