"""Combinatorics of n-gon dissections, the labeled associahedron, and
the resolutions it supports: exact homology checks, graded Betti numbers,
standard Young tableau counts, and discrete Morse matchings."""

from .associahedron import (
    Face,
    LabeledComplex,
    boundary_complex,
    build,
    f_formula,
    hasse,
    restrict,
)
from .betti import (
    BettiTable,
    MethodDisagreement,
    betti_closed_form,
    betti_recursion,
    betti_table,
    compare_methods,
    hochster_betti,
)
from .homology import (
    ChainComplex,
    Field,
    chain_complex,
    is_acyclic,
    reduced_betti_numbers,
    simplicial_reduced_betti,
)
from .morse import (
    MatchingReport,
    MorseMatching,
    count_formulas,
    critical_cells,
    d2_matching,
    greedy_extend,
    n7_extension_counts,
    validate,
)
from .polygon import (
    Diagonal,
    Dissection,
    SupportClass,
    all_diagonals,
    classify,
    count_by_class,
    count_by_support,
    count_trees,
    crosses,
    diagonal,
    is_tree,
    iter_dissections,
    iter_noncrossing,
    support,
)
from .resolution import (
    ResolutionReport,
    cone_apex,
    cone_witness,
    minimality_witnesses,
    verify_supports_resolution,
)
from .tableaux import (
    Tableau,
    associahedron_count,
    associahedron_shape,
    conjugate,
    enumerate_family,
    enumerate_syt,
    family_params,
    hook_count,
    involution,
    restrict_to_syzygy,
    restricts_to_syzygy,
    syzygy_count,
    syzygy_shape,
)

__all__ = [
    "BettiTable",
    "ChainComplex",
    "Diagonal",
    "Dissection",
    "Face",
    "Field",
    "LabeledComplex",
    "MatchingReport",
    "MethodDisagreement",
    "MorseMatching",
    "ResolutionReport",
    "SupportClass",
    "Tableau",
    "all_diagonals",
    "associahedron_count",
    "associahedron_shape",
    "betti_closed_form",
    "betti_recursion",
    "betti_table",
    "boundary_complex",
    "build",
    "chain_complex",
    "classify",
    "compare_methods",
    "cone_apex",
    "cone_witness",
    "conjugate",
    "count_by_class",
    "count_by_support",
    "count_formulas",
    "count_trees",
    "critical_cells",
    "crosses",
    "d2_matching",
    "diagonal",
    "enumerate_family",
    "enumerate_syt",
    "f_formula",
    "family_params",
    "greedy_extend",
    "hasse",
    "hochster_betti",
    "hook_count",
    "involution",
    "is_acyclic",
    "is_tree",
    "iter_dissections",
    "iter_noncrossing",
    "minimality_witnesses",
    "n7_extension_counts",
    "reduced_betti_numbers",
    "restrict",
    "restrict_to_syzygy",
    "restricts_to_syzygy",
    "simplicial_reduced_betti",
    "support",
    "syzygy_count",
    "syzygy_shape",
    "validate",
    "verify_supports_resolution",
]
