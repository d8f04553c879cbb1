"""Exact linear sequential dynamical systems over finite fields and Q."""

from linsds._core import (  # noqa: F401
    ChainPartition,
    Cut,
    CutReport,
    CutSide,
    ExpandedGraph,
    FieldSpec,
    Graph,
    IncidenceElement,
    LiftedWord,
    LinearSDS,
    LinsdsError,
    LUFactors,
    Matrix,
    MultiplicityVector,
    PhaseSpace,
    Poset,
    Schedule,
    SelftestReport,
    SelftestSuite,
    WordSystemReport,
    adjacency_matrix,
    apply_row_perm,
    block_compress,
    block_expand,
    c_graph,
    chain_power_oracle,
    circ,
    compose_oracle,
    cut_identity_check,
    enumerate_phase_space,
    expand_graph,
    fixed_points_algebraic,
    incidence_mul,
    invert_sds,
    lift_word,
    linear_extensions,
    local_matrix,
    lu_decompose,
    lu_synthesize,
    lup_decompose,
    mat_inv,
    mat_mul,
    matrix_from_json,
    matrix_to_json,
    moebius,
    moebius_via_sds,
    nilpotent_inverse_series,
    parity_coefficients,
    phase_space_dot,
    poset_from_acyclic_orientation,
    poset_from_json,
    poset_to_json,
    random_cut_instance,
    restrict_after,
    run_selftest,
    split_compose_check,
    state_label,
    sub_poset_moebius,
    system_from_json,
    system_matrix_perm,
    system_matrix_word,
    system_to_json,
    word_system_report,
    zeta,
)

__version__ = "0.1.0"
