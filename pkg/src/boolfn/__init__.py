"""Exact spectral analysis of Boolean functions on packed truth tables.

Truth tables live in arbitrary-precision ints (bit i = f(v_i), lexicographic
point order), the Walsh transform runs as an integer butterfly, the algebraic
normal form comes from a packed binary Mobius transform, and the majority
family ships with closed-form predictions plus an identity checker.
"""

from __future__ import annotations

from .anf import AnfTable, degree, is_affine, to_anf
from .majority import (
    BINOMIAL_MAX,
    VERIFY_MAX_K,
    IdentityResult,
    MajorityReport,
    binomial,
    first_quarter,
    left_half,
    majority,
    majority_report,
    predicted_left_half_weight,
    predicted_nonlinearity,
    predicted_quarter_half_weights,
    predicted_right_half_nonlinearity,
    right_half,
    run_length_string,
    verify_identities,
)
from .spectral import (
    AffineSpec,
    WalshSpectrum,
    WeightNonlinearityCheck,
    affine_table,
    brute_force_nonlinearity,
    check_weight_equals_nonlinearity,
    nonlinearity,
    walsh_transform,
)
from .truthtable import (
    PointVector,
    TruthTable,
    concat,
    from_bitstring,
    from_hex,
    max_vars,
    point_weight,
    random_table,
)

__all__ = [
    "AffineSpec",
    "AnfTable",
    "BINOMIAL_MAX",
    "IdentityResult",
    "MajorityReport",
    "PointVector",
    "TruthTable",
    "VERIFY_MAX_K",
    "WalshSpectrum",
    "WeightNonlinearityCheck",
    "affine_table",
    "binomial",
    "brute_force_nonlinearity",
    "check_weight_equals_nonlinearity",
    "concat",
    "degree",
    "first_quarter",
    "from_bitstring",
    "from_hex",
    "is_affine",
    "left_half",
    "majority",
    "majority_report",
    "max_vars",
    "nonlinearity",
    "point_weight",
    "predicted_left_half_weight",
    "predicted_nonlinearity",
    "predicted_quarter_half_weights",
    "predicted_right_half_nonlinearity",
    "random_table",
    "right_half",
    "run_length_string",
    "to_anf",
    "verify_identities",
    "walsh_transform",
]
