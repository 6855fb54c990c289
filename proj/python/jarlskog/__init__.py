"""Module parametrization of unitary matrices and qudit gate synthesis.

The heavy lifting lives in the compiled extension; this package just
re-exports it under friendlier paths.
"""

from ._core import (
    BlockModule,
    DecompositionResult,
    FactorSequence,
    GateId,
    GateKind,
    NonUnitaryError,
    ParseError,
    PhaseModule,
    Recipe,
    UnsupportedDimensionError,
    __version__,
    compose_sequence,
    dagger,
    decompose,
    euler_u2,
    exp_skew_block,
    factor_matrix,
    gate_matrix,
    haar_random_unitary,
    k_matrix,
    load_factors,
    load_matrix,
    make_block_module,
    make_phase_module,
    mat_exp_series,
    mat_mul,
    max_abs_diff,
    pauli_power,
    primitive_root,
    recipe_k,
    recipe_sigma1,
    recipe_sigma3,
    recipe_walsh,
    roundtrip_error,
    save_factors,
    save_matrix,
    sigma1,
    sigma3,
    unitary_error,
    verify_recipe,
    walsh,
    walsh_dagger,
)

__all__ = [
    "BlockModule",
    "DecompositionResult",
    "FactorSequence",
    "GateId",
    "GateKind",
    "NonUnitaryError",
    "ParseError",
    "PhaseModule",
    "Recipe",
    "UnsupportedDimensionError",
    "__version__",
    "compose_sequence",
    "dagger",
    "decompose",
    "euler_u2",
    "exp_skew_block",
    "factor_matrix",
    "gate_matrix",
    "haar_random_unitary",
    "k_matrix",
    "load_factors",
    "load_matrix",
    "make_block_module",
    "make_phase_module",
    "mat_exp_series",
    "mat_mul",
    "max_abs_diff",
    "pauli_power",
    "primitive_root",
    "recipe_k",
    "recipe_sigma1",
    "recipe_sigma3",
    "recipe_walsh",
    "roundtrip_error",
    "save_factors",
    "save_matrix",
    "sigma1",
    "sigma3",
    "unitary_error",
    "verify_recipe",
    "walsh",
    "walsh_dagger",
]
