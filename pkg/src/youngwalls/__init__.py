"""Exact enumeration of three-row Young tableaux with walls, their
generating functions, and tree-child network counts."""

from .exact_arith import ExactRational, Nat, binomial, double_factorial, factorial, rat
from .wall_tables import a_alt, a_rec, b, b3, b3_hook, b_cor_rec, omega
from .closed_forms import (
    a_closed,
    a_diag,
    alpha,
    b_closed,
    delta,
    gamma,
    lemma28_rhs,
    lemma29_check,
    omega_init,
)
from .series_engine import (
    TSeries,
    XTSeries,
    bk_from_table,
    bk_solve,
    catalan_series,
    dk_closed,
    dk_from_table,
    dk_kernel,
    dk_threeway,
    fk_next,
    kernel_chain,
    kernel_residual,
    neg_pow_series,
    x2_series,
)
from .poset_lab import (
    CapacityError,
    Poset,
    WallShape,
    a_brute,
    b3_brute,
    b_brute,
    b_from_u,
    b_monster,
    build_D,
    build_F,
    build_Ftilde,
    build_R,
    build_U,
    count_linear_extensions,
    direct_sum,
    f_closed,
    f_sum,
    forest_hook_count,
    ftilde,
    ordinal_sum,
    r_sum,
    tableau_poset,
    u_from_b,
)
from .tree_child import (
    tc,
    tc_asym,
    tc_asym_log,
    tc_asym_rel_error,
    tc_chain,
    tc_closed,
    tc_rec,
    tc_sum,
    tc_via_b,
)

__version__ = "0.1.0"

__all__ = [
    "ExactRational",
    "Nat",
    "binomial",
    "double_factorial",
    "factorial",
    "rat",
    "a_alt",
    "a_rec",
    "b",
    "b3",
    "b3_hook",
    "b_cor_rec",
    "omega",
    "a_closed",
    "a_diag",
    "alpha",
    "b_closed",
    "delta",
    "gamma",
    "lemma28_rhs",
    "lemma29_check",
    "omega_init",
    "TSeries",
    "XTSeries",
    "bk_from_table",
    "bk_solve",
    "catalan_series",
    "dk_closed",
    "dk_from_table",
    "dk_kernel",
    "dk_threeway",
    "fk_next",
    "kernel_chain",
    "kernel_residual",
    "neg_pow_series",
    "x2_series",
    "CapacityError",
    "Poset",
    "WallShape",
    "a_brute",
    "b3_brute",
    "b_brute",
    "b_from_u",
    "b_monster",
    "build_D",
    "build_F",
    "build_Ftilde",
    "build_R",
    "build_U",
    "count_linear_extensions",
    "direct_sum",
    "f_closed",
    "f_sum",
    "forest_hook_count",
    "ftilde",
    "ordinal_sum",
    "r_sum",
    "tableau_poset",
    "u_from_b",
    "tc",
    "tc_asym",
    "tc_asym_log",
    "tc_asym_rel_error",
    "tc_chain",
    "tc_closed",
    "tc_rec",
    "tc_sum",
    "tc_via_b",
]
