"""Exact combinatorics of the alt-Tamari posets on Dyck paths.

Construction and order queries for the whole family of posets between the
Dyck (Stanley) lattice and the Tamari lattice, exhaustive linear-interval
censuses with closed-form count oracles, and the constructive bijections
that transport linear intervals between any two posets of the family.
"""

from .bijections import (
    Decomposition,
    MarkedPath,
    compose,
    compose_covering,
    compose_left,
    compose_right,
    decompose,
    decompose_covering,
    decompose_left,
    decompose_right,
    transport,
)
from .counting import (
    CountsTable,
    IntervalKind,
    census,
    classify,
    closed_form,
    left_right_split,
    total_closed_form,
)
from .delta import (
    IncrementFunction,
    StepStats,
    build_alt_tamari,
    delta_elevation,
    delta_excursion,
    delta_rotation,
    delta_test_set,
    refines,
    step_stats,
    upper_covers,
)
from .dyck import (
    DyckPath,
    Span,
    catalan,
    enumerate_paths,
    excursion,
    heights,
    includes,
    match_up,
    mirror,
    parse_dyck,
    peaks,
    valleys,
)
from .poset import LinearPolynomial, Poset, build_poset, product
from .series import (
    TruncatedSeries,
    marked_series,
    phi_coeff,
    phi_coeff_binomial,
    phi_coeff_series,
    s_coeff,
    s_series,
    solve_tree_series,
)
from .trees import (
    TreeInterval,
    build_L,
    build_R,
    enumerate_trees,
    graft,
    is_new_interval,
    left_comb,
    left_rotation_covers,
    mirror_tree,
    plug,
    right_comb,
    tree_to_path,
)

__version__ = "0.1.0"
