"""Generalized minimal absent words over multiple strings.

Build an edge-sorted DAWG of a document collection and enumerate
MAW(S_B) for any membership pattern B in output-sensitive time, with
brute-force oracles for verification.
"""

from .alphabet import (
    DocumentCollection,
    InternError,
    SymbolTable,
    externalize,
    intern_collection,
)
from .bitsets import (
    MaskError,
    check_query_mask,
    full_mask,
    mask_from_docs,
    mask_from_string,
    mask_to_string,
)
from .dawg import (
    BACKEND,
    ConcatDawg,
    Dawg,
    DawgError,
    build_concat_dawg,
    build_dawg,
    compute_labels,
    get_kernel,
    prune_to_multi,
)
from .maws import (
    CorruptMawRef,
    CountingSink,
    MawRef,
    MergeStats,
    build_skip_index,
    candidate_absent,
    candidate_present,
    collect_maws,
    decode_maw,
    enumerate_maw_prime,
    enumerate_maws,
    enumerate_specific,
    set_ops,
    skip_symbols,
)
from .oracle import (
    oracle_endpos_partition,
    oracle_maw_prime,
    oracle_maws,
    oracle_specific,
    single_maws,
    substr_set,
)

__version__ = "0.1.0"
