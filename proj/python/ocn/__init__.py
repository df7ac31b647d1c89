"""Overlapping community network analysis.

Thin re-export of the compiled core; see ``help(ocn._ocn)`` for signatures.
"""

from ._ocn import (
    FAMILIES,
    CommunityCover,
    Distribution,
    FitError,
    Graph,
    InputError,
    ProjectedGraph,
    __version__,
    assortativity,
    average_local_clustering,
    average_local_clustering_zero_filled,
    clustering_by_degree,
    component_census,
    component_sizes,
    density,
    diameter,
    extract_giant,
    fit,
    fit_all,
    hop_distribution,
    ks_statistic,
    load_cover,
    load_edge_list,
    local_clustering,
    overlap_pairs,
    powerlaw_xmin_scan,
    project,
    run_fit,
    run_project,
    run_report,
    run_stats,
    summary,
    transitivity,
    triangles,
)

__all__ = [name for name in dir() if not name.startswith("_")]
