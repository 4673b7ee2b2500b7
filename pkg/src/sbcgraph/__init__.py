"""Strongly biconvex graphs: induced matchings, disjoint families and Betti supports."""
from .betti import (BettiSupport, betti_support_sbc, betti_support_weakly_chordal, extremal_corners,
                    hochster_betti, hochster_multigraded, hochster_support, kimura_nonvanishing,
                    multigraded_support, support_of_disjoint_union)
from .closed import (BinomialReport, ClosedGraph, binomial_invariants, closed_to_simple, glue, initial_graph,
                     initial_profile, is_closed_labeling)
from .constructions import (GapParams, build_g0, build_g0t, build_h0, build_h0_doubleprime, random_gluing,
                            random_sbc)
from .families import (DisjointFamily, FamilyCheck, FamilyError, brute_force_d, d_recursive, d_stratified,
                       d_value, enumerate_families, is_ordered, normalize_ordered, replace_with_be,
                       stratified_table, validate_family)
from .graph_core import (BipartiteGraph, GraphError, Matching, SimpleGraph, brute_force_inm, complement,
                         connected_components, induced_subgraph, is_induced_matching, is_weakly_chordal,
                         max_independent_set, to_simple)
from .sbc import (EMPTY, Block, GreedyTrace, IsolatedVertexError, ProfileError, SbcProfile, Violation, b_e,
                  check_strongly_biconvex, greedy_induced_matching, max_y_neighbor, prefix_delete,
                  profile_to_graph)

__version__ = "0.1.0"
