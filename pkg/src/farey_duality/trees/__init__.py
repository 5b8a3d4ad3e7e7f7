"""Tree generators: classic fraction trees, intersection-vector trees and word trees."""

from .catalog import TreeValue, dump_tree, enumerate_level, node_value, value_to_json
from .classic import (
    FAREY_ROOT,
    GradientTriple,
    cw_locate,
    cw_node,
    farey_triple_node,
    sb_locate,
    sb_node,
)
from .cluster import (
    FORM_TRANSITIONS,
    IndexPair,
    IntersectionMatrix,
    IntersectionVector,
    MatrixForm,
    classify_dual_form,
    classify_form,
    dual_matrix_of,
    flip_triple,
    grad_to_ivec,
    gradient_triple_of,
    h_walk,
    h_walk_states,
    initial_gradients,
    intersection_number,
    map_g,
    matrix_of,
    phi_flip,
    psi_flip,
    root_gradients,
    tree_d,
    tree_ddag,
)
from .words import (
    BWord,
    TripleKind,
    WordPair,
    WordTriple,
    christoffel_children,
    christoffel_node,
    christoffel_triple_children,
    christoffel_triple_node,
    christoffel_word,
    cohn_children,
    cohn_node,
    combined_cohn_node,
    counts,
    det_pair,
    is_christoffel,
    path_oracle,
    star,
    substitute_a,
    substitute_b,
    verify_christoffel_main,
    verify_dual_christoffel,
    verify_morphism_closure,
)

__all__ = [
    "TreeValue",
    "dump_tree",
    "enumerate_level",
    "node_value",
    "value_to_json",
    "FAREY_ROOT",
    "GradientTriple",
    "cw_locate",
    "cw_node",
    "farey_triple_node",
    "sb_locate",
    "sb_node",
    "FORM_TRANSITIONS",
    "IndexPair",
    "IntersectionMatrix",
    "IntersectionVector",
    "MatrixForm",
    "classify_dual_form",
    "classify_form",
    "dual_matrix_of",
    "flip_triple",
    "grad_to_ivec",
    "gradient_triple_of",
    "h_walk",
    "h_walk_states",
    "initial_gradients",
    "intersection_number",
    "map_g",
    "matrix_of",
    "phi_flip",
    "psi_flip",
    "root_gradients",
    "tree_d",
    "tree_ddag",
    "BWord",
    "TripleKind",
    "WordPair",
    "WordTriple",
    "christoffel_children",
    "christoffel_node",
    "christoffel_triple_children",
    "christoffel_triple_node",
    "christoffel_word",
    "cohn_children",
    "cohn_node",
    "combined_cohn_node",
    "counts",
    "det_pair",
    "is_christoffel",
    "path_oracle",
    "star",
    "substitute_a",
    "substitute_b",
    "verify_christoffel_main",
    "verify_dual_christoffel",
    "verify_morphism_closure",
]
