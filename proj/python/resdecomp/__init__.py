"""Effective-resistance graph clustering (Python bindings)."""

from ._resdecomp import (
    ConvergenceError,
    CutResult,
    CutStats,
    Decomposition,
    DegeneratePotentialError,
    DisconnectedGraphError,
    Error,
    Graph,
    GraphFormatError,
    InfiniteResistanceError,
    InvalidArgument,
    Verification,
    approx_reff_from_source,
    barbell,
    complete_graph,
    connected_components,
    cut_stats,
    exact_rdiam,
    exact_reff,
    exact_reff_matrix,
    find_sparse_cut,
    furthest_pair,
    grid2d,
    hypercube,
    partition,
    random_regular,
    read_edge_list,
    run_cli,
    st_potential,
    verify_partition,
    write_edge_list,
)

__all__ = [name for name in dir() if not name.startswith("_")]
