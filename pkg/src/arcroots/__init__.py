"""Mutation of 2-complete acyclic exchange matrices, reduced words in the
universal Coxeter group, arcs in a punctured disc, and the two-oracle
decision procedure for real Schur roots that ties them together.
"""

from .arcs import (
    Arc,
    TupleVerdict,
    arc_to_reflection,
    braid_swap,
    canonicalize_arc,
    is_bad_pair,
    reflection_to_arc,
    tuple_verdict,
    twin,
    twin_replace_walk,
)
from .dot import cayley_fragment_dot, exchange_tree_dot
from .embedding import (
    EmbeddingReport,
    EmbeddingWitness,
    candidate_witnesses,
    is_embeddable,
    probe_embedding,
    witness_is_valid,
)
from .errors import ArcrootsError
from .explore import (
    ALL_CHECKS,
    ExplorationReport,
    SearchOutcome,
    complete_arc,
    explore,
    iter_seeds,
    schur_by_search,
    seed_digest,
)
from .quiver import (
    ExchangeMatrix,
    MutationKind,
    acyclic_representative,
    classify_mutation,
    decreasing_directions,
    natural_order,
    normalized,
    separating_vertex,
)
from .roots import (
    GramMatrix,
    Sign,
    YSeed,
    all_weights_two_gram,
    cartan_companion,
    initial_seed,
    mutate_seed,
    mutate_seed_matrix,
    natural_coxeter_product,
    natural_fan,
    reflection_to_root,
    root_to_reflection,
    sign_run_count,
    speyer_thomas_check,
)
from .words import (
    Reflection,
    canonical_reflection,
    comparable,
    generator,
    in_one_star,
    inv,
    mul,
    node_path,
    precedes,
    reduce_word,
    separating_nodes,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_CHECKS",
    "Arc",
    "ArcrootsError",
    "EmbeddingReport",
    "EmbeddingWitness",
    "ExchangeMatrix",
    "ExplorationReport",
    "GramMatrix",
    "MutationKind",
    "Reflection",
    "SearchOutcome",
    "Sign",
    "TupleVerdict",
    "YSeed",
    "acyclic_representative",
    "all_weights_two_gram",
    "arc_to_reflection",
    "braid_swap",
    "candidate_witnesses",
    "canonical_reflection",
    "canonicalize_arc",
    "cartan_companion",
    "cayley_fragment_dot",
    "classify_mutation",
    "comparable",
    "complete_arc",
    "decreasing_directions",
    "exchange_tree_dot",
    "explore",
    "generator",
    "in_one_star",
    "initial_seed",
    "inv",
    "is_bad_pair",
    "is_embeddable",
    "iter_seeds",
    "mul",
    "mutate_seed",
    "mutate_seed_matrix",
    "natural_coxeter_product",
    "natural_fan",
    "natural_order",
    "node_path",
    "normalized",
    "precedes",
    "probe_embedding",
    "reduce_word",
    "reflection_to_arc",
    "reflection_to_root",
    "root_to_reflection",
    "schur_by_search",
    "seed_digest",
    "separating_nodes",
    "separating_vertex",
    "sign_run_count",
    "speyer_thomas_check",
    "tuple_verdict",
    "twin",
    "twin_replace_walk",
    "witness_is_valid",
]
