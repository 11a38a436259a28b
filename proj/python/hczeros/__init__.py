"""Independence-polynomial zero-free-region toolkit."""

from ._core import (
    Certificate,
    Graph,
    blowup,
    boundary,
    certify_clawfree,
    certify_sttt,
    check_L_bound,
    coeffs,
    connected_components,
    contains_induced,
    cycle,
    cycle_zero_weights,
    find_indifferent_lambda,
    find_simplicial_cliques,
    find_sparse_counterexample,
    graph_from_text,
    graph_to_text,
    in_class_cls,
    in_halfplane,
    in_parabola,
    in_region_F,
    in_region_Fstar,
    induced_subgraph,
    is_claw_free,
    is_simplicial_clique,
    is_sttt_free,
    is_subdivided_claw_free,
    line_cover,
    max_clique_size,
    multipartite,
    multipartite_root_near,
    path_power,
    r_bound,
    roots,
    subdivided_claw,
    tree_T,
    tree_g_iter,
    tree_zero_search,
    vol_bound,
    z_eval,
    z_eval_exact,
)

__all__ = [
    "Certificate",
    "Graph",
    "blowup",
    "boundary",
    "certify_clawfree",
    "certify_sttt",
    "check_L_bound",
    "coeffs",
    "connected_components",
    "contains_induced",
    "cycle",
    "cycle_zero_weights",
    "find_indifferent_lambda",
    "find_simplicial_cliques",
    "find_sparse_counterexample",
    "graph_from_text",
    "graph_to_text",
    "in_class_cls",
    "in_halfplane",
    "in_parabola",
    "in_region_F",
    "in_region_Fstar",
    "induced_subgraph",
    "is_claw_free",
    "is_simplicial_clique",
    "is_sttt_free",
    "is_subdivided_claw_free",
    "line_cover",
    "max_clique_size",
    "multipartite",
    "multipartite_root_near",
    "path_power",
    "r_bound",
    "roots",
    "subdivided_claw",
    "tree_T",
    "tree_g_iter",
    "tree_zero_search",
    "vol_bound",
    "z_eval",
    "z_eval_exact",
]
