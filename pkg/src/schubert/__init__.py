"""
Schubert and skew Schubert polynomials over the symmetric group: rc-graph
and labeled-chain enumeration, normal forms in the coinvariant quotient,
and Littlewood-Richardson structure constants by mutually checking routes.
"""

from .calc import (
    SchubertExpansion,
    expand_in_schubert_basis,
    lr_coefficients,
    pieri,
    psi_alpha,
    schubert,
    schur_oracle,
    skew,
    skew_expansion,
    verify_corollary,
)
from .chains import (
    LabeledChain,
    chain_from_json_obj,
    chain_monomial,
    chain_to_json_obj,
    chain_type,
    count_by_type,
    increasing_chains,
    increasing_chains_to_w0,
)
from .perms import (
    Perm,
    bruhat_covers,
    bruhat_leq,
    code,
    compose,
    embed,
    identity,
    inverse,
    labeled_edges,
    length,
    longest,
    perm_from_code,
    perm_from_str,
    perm_to_str,
)
from .poly import (
    Poly,
    complete_h,
    elementary,
    h_alpha,
    monomial_key,
    normal_form,
    poly_from_json_obj,
    poly_from_text,
    poly_to_json_obj,
    poly_to_text,
    staircase_exponent,
)
from .rcgraphs import (
    RcGraph,
    chain_of_rcgraph,
    enumerate_rcgraphs,
    is_valid,
    perm_of,
    rcgraph_from_json_obj,
    rcgraph_of_chain,
    rcgraph_to_json_obj,
    render_ascii,
    staircase,
    word,
)
from .schur import grassmannian_descent, grassmannian_shape, semistandard_tableaux

__version__ = "0.1.0"

__all__ = [
    "LabeledChain",
    "Perm",
    "Poly",
    "RcGraph",
    "SchubertExpansion",
    "bruhat_covers",
    "bruhat_leq",
    "chain_from_json_obj",
    "chain_monomial",
    "chain_of_rcgraph",
    "chain_to_json_obj",
    "chain_type",
    "code",
    "complete_h",
    "compose",
    "count_by_type",
    "elementary",
    "embed",
    "enumerate_rcgraphs",
    "expand_in_schubert_basis",
    "grassmannian_descent",
    "grassmannian_shape",
    "h_alpha",
    "identity",
    "increasing_chains",
    "increasing_chains_to_w0",
    "inverse",
    "is_valid",
    "labeled_edges",
    "length",
    "longest",
    "lr_coefficients",
    "monomial_key",
    "normal_form",
    "perm_from_code",
    "perm_from_str",
    "perm_of",
    "perm_to_str",
    "pieri",
    "poly_from_json_obj",
    "poly_from_text",
    "poly_to_json_obj",
    "poly_to_text",
    "psi_alpha",
    "rcgraph_from_json_obj",
    "rcgraph_of_chain",
    "rcgraph_to_json_obj",
    "render_ascii",
    "schubert",
    "schur_oracle",
    "semistandard_tableaux",
    "skew",
    "skew_expansion",
    "staircase",
    "staircase_exponent",
    "verify_corollary",
    "word",
]
