"""Braid monodromy and Galois-cover invariants of embedded Hirzebruch surfaces."""

from .braids import (
    BraidWord,
    FreeWord,
    Permutation,
    PuncturePath,
    are_equal,
    artin_action,
    compose,
    conjugate,
    exponent_sum,
    full_twist,
    half_twist,
    permutation,
)
from .arrangement import (
    LineArrangement,
    NonGenericArrangement,
    arrangement_monodromy_factorization,
    critical_data,
    local_model,
    monodromy_oracle,
)
from .factorization import Factor, Factorization, degree_audit, verify_product_is_full_twist
from .degeneration import build_complex, classify_vertices, counts, induced_arrangement
from .regeneration import (
    RegeneratedIndexing,
    cuspidal_normal_form,
    regenerate_pair_block,
    regenerated_factorization,
    six_point_local,
    special_vertex_local,
    three_point_local,
)
from .invariants import (
    ChernPair,
    SurfaceParams,
    branch_invariants,
    chern_Y,
    classify,
    equal_chern_pair,
    galois_chern,
    hirzebruch_data,
    pi1,
    scan,
    signature,
    veronese_chern,
)

__version__ = "0.1.0"
