"""Tree dimension, leveled tree dimension and their m-ary variants for leaf sets."""
from .dimension import (
    DimensionReport,
    OracleMismatch,
    binomial_bound,
    dimension_report,
    ltd,
    mary_bound,
    mtd_ell,
    td,
    td_ell,
)
from .learning import Labeling, SetFamily, chi_labeling, chi_tuple, littlestone_dim, shatters, vc_dim
from .maximal import canonical_ball, canonical_form, greedy_complete, is_maximal, search_counterexample, tree_isomorphic
from .normalization import normalize_binary, normalize_mary
from .oracle import EmbeddingKind, EmbeddingWitness, brute_dimension, embed_exists, is_embedding
from .tree_core import (
    BranchTrie,
    LeafSet,
    branch_closure,
    meet,
    norm,
    norm_ell,
    restrict,
    set_norm,
    split_projection,
    swap,
)

__version__ = "0.1.0"
