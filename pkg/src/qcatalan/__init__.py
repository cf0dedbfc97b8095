"""Exact rational q-Catalan combinatorics in type A, with B2 and G2 checks."""

from .catalan import (
    GermTable,
    cat_count,
    cat_count_k,
    cat_q,
    cat_q_k,
    germ,
    germ_brute,
    germ_reconstruction,
    germ_sum_check,
    germ_table,
    prev_coprime,
    q_ramanujan_sum,
    ramanujan_sum,
)
from .dyck import DyckPath, area, enumerate_dyck, maj, qt_catalan, sweep
from .errors import (
    DimensionMismatch,
    MalformedPartition,
    MultisetMismatch,
    NotCoprime,
    NotCoprimeToCF,
    NotDivisible,
    NotRootPoint,
    QCatalanError,
    ResourceLimit,
    SearchTimeout,
    Stuck,
)
from .johnson import (
    GreedyStatistic,
    JohnsonStatistic,
    Partition,
    column_statistic,
    count_ribbon_partitions,
    eval_j,
    greedy_standard_partition,
    is_ribbon,
    is_standard_set,
    lemma_pochhammer_identity,
    partition_to_johnson,
    ribbon_partition_search,
    a4_ribbon_statistic,
    verify_box_identities,
    verify_brion,
    verify_catalan_property,
    verify_coset_decomposition,
)
from .lattice import (
    Box,
    BoxSlice,
    RotatedBox,
    Simplex,
    coset_index,
    enumerate_points,
    from_tilted_coords,
    height_gen_poly,
    is_cover,
    is_root_point,
    phi,
    quo_rem_mod_a,
    tilted_height,
    tilted_leq,
    to_tilted_coords,
)
from .qpoly import (
    BiPoly,
    LaurentPoly,
    exact_div,
    q,
    q_binomial,
    q_int,
    q_pochhammer,
    substitute_power,
)
from .verify import (
    Verdict,
    build_johnson_via_greedy,
    check_germ_positivity,
    check_monotone,
    check_monotone_nonco,
    rank_level_duality,
)
from .weyl import B2, G2, RootSystemData, verify_weyl, weyl_cat_q

__version__ = "0.1.0"
