"""Hoffman graphs and the integrally representable trees of norm 3.

Exact spectral tests, an integral representation solver, the family F of
building blocks and the stripped-sum construction, plus the enumeration
engines that cross-check them.
"""

from .catalog import (FamilyFMember, family_F, make_c, make_esimilar_seedling, make_f_prime_3,
                      make_fat_star, make_h_t, make_psi_c)
from .classify import (MainTheoremReport, NoWitnessWithinBudget, Reducible, TreeCensusEntry,
                       brute_force_ir_trees, complete_to_radius3, construct_ir_trees_from_F,
                       enumerate_fat_3_seedlings, enumerate_small_tree_like, is_reducible_bounded,
                       is_seedling_bounded, verify_main_theorem)
from .graph import Graph, cycle_graph, path_graph, spider, star_graph
from .hoffman import (HoffmanError, HoffmanGraph, attach_fat, check_tree_like_stripping, decompose,
                      direct_sum, is_saturated, iter_saturations_preserving_ir, lambda_min_cmp, lambda_min_cmp3,
                      saturate_preserving_ir,
                      special_graph, special_matrix, stripped_sum)
from .linalg import LambdaOrder, cmp_lambda_max, cmp_lambda_min
from .representation import (FullRep, Outcome, ReducedRep, SolveResult, is_integrally_representable,
                             solve_reduced_integral, verify_full, verify_reduced)
from .signed import EdgeSignedGraph, enumerate_minus_matchings, switch_at, switching_equivalent
from .smith import smith_graph
from .trees import canonical_code, enumerate_free_trees

__version__ = "0.1.0"

__all__ = [
    "FamilyFMember",
    "family_F",
    "make_c",
    "make_esimilar_seedling",
    "make_f_prime_3",
    "make_fat_star",
    "make_h_t",
    "make_psi_c",
    "MainTheoremReport",
    "NoWitnessWithinBudget",
    "Reducible",
    "TreeCensusEntry",
    "brute_force_ir_trees",
    "complete_to_radius3",
    "construct_ir_trees_from_F",
    "enumerate_fat_3_seedlings",
    "enumerate_small_tree_like",
    "is_reducible_bounded",
    "is_seedling_bounded",
    "verify_main_theorem",
    "Graph",
    "cycle_graph",
    "path_graph",
    "spider",
    "star_graph",
    "HoffmanError",
    "HoffmanGraph",
    "attach_fat",
    "check_tree_like_stripping",
    "decompose",
    "direct_sum",
    "is_saturated",
    "iter_saturations_preserving_ir",
    "lambda_min_cmp",
    "lambda_min_cmp3",
    "saturate_preserving_ir",
    "special_graph",
    "special_matrix",
    "stripped_sum",
    "LambdaOrder",
    "cmp_lambda_max",
    "cmp_lambda_min",
    "FullRep",
    "Outcome",
    "ReducedRep",
    "SolveResult",
    "is_integrally_representable",
    "solve_reduced_integral",
    "verify_full",
    "verify_reduced",
    "EdgeSignedGraph",
    "enumerate_minus_matchings",
    "switch_at",
    "switching_equivalent",
    "smith_graph",
    "canonical_code",
    "enumerate_free_trees",
]
