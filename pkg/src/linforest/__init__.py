"""Exact tools for generalized Turan problems on linear forests."""

from .cliques import count_cliques, gf_formula, luo_bound, path_turan_lower, theorem_value, threshold_n
from .constructions import apex_cliques, apex_mixed, base_plus_k4, build_gf, build_gf_i, clique_union, path_union
from .disintegration import DisintegrationTrace, disintegrate, verify_step_bound
from .enumeration import EnumFilter, enumerate_graphs
from .errors import BudgetExceeded, LinforestError
from .extremal import ExtremalRecord, brute_force_ex, brute_force_path_ex, reconcile
from .forest import LinearForest, delta_f, parse
from .formats import from_graph6, to_graph6
from .graph import Graph, from_edges
from .paths import contains_linear_forest, has_strong_dominating_path, longest_path_order
from .structure import ClassificationVerdict, classify, is_subgraph_of_gf

__version__ = "0.1.0"
