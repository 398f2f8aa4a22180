"""Pseudo-disk intersection hypergraphs: combinatorial bounds checked
empirically, plus weighted dominating-set solvers via the hitting-set
reduction."""

__version__ = "0.1.0"

from .geometry import (
    ConvexTemplate,
    Disk,
    Homothet,
    PseudoDiskFamily,
    build_intersection_hypergraph,
    circle_crossing_count,
    disks_intersect,
    find_private_point,
    homothets_intersect,
    neighborhood_hypergraph,
)
from .hypergraph import (
    Hypergraph,
    canonicalize,
    count_edges_at_most,
    count_k_good_pairs,
    find_shattered_subset,
    restrict_trace,
)
from .kernels import BACKEND
from .solvers import (
    DomSetResult,
    FractionalSolution,
    domset_pipeline,
    exact_min_weight_hitting_set,
    greedy_hitting_set,
    round_and_repair,
    solve_lp,
    verify_hitting_set,
)
