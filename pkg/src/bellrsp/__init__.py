"""Remote preparation of alpha|0...0> + beta|1...1> over one shared Bell pair.

The package splits into four layers: a dense statevector engine
(:mod:`bellrsp.statevector`), the protocol proper with its classical codec
(:mod:`bellrsp.protocol`), exact and Monte Carlo cost accounting
(:mod:`bellrsp.analysis`), and a command-line frontend (:mod:`bellrsp.cli`).
"""

from .analysis import (
    BranchOutcome,
    ComparisonRow,
    ExactAnalysis,
    LITERATURE_ROWS,
    MonteCarloStats,
    RowSource,
    emit_comparison_table,
    exact_analyze,
    monte_carlo,
    trial_rng,
)
from .errors import (
    BadQubitCount,
    BellRspError,
    DimensionMismatch,
    DuplicateTarget,
    InvalidFlag,
    MalformedMessage,
    NegativeAlpha,
    NonNormalizedTarget,
    NonUnitary,
    SameQubit,
    ZeroProbabilityBranch,
)
from .protocol import (
    CASE_TOL,
    ClassicalMessage,
    SUCCESS_TOL,
    TargetCase,
    TargetSpec,
    TrialRecord,
    alice_encode,
    bob_act,
    build_target_state,
    canonicalize_target,
    classify_case,
    run_trial,
    target_basis,
)
from .statevector import (
    HADAMARD,
    INPUT_TOL,
    MeasurementBasis,
    NORM_TOL,
    Outcome,
    PAULI_X,
    ROT90,
    SQRT_HALF,
    StateVector,
    UNITARY_TOL,
    append_ancillas,
    apply_1q,
    apply_cnot,
    basis_from_target,
    check_decomposition,
    cnot_fanout,
    fidelity_mod_phase,
    make_bell,
    measure_in_basis,
)

__version__ = "0.1.0"

__all__ = [
    "BadQubitCount",
    "BellRspError",
    "BranchOutcome",
    "CASE_TOL",
    "ClassicalMessage",
    "ComparisonRow",
    "DimensionMismatch",
    "DuplicateTarget",
    "ExactAnalysis",
    "HADAMARD",
    "INPUT_TOL",
    "InvalidFlag",
    "LITERATURE_ROWS",
    "MalformedMessage",
    "MeasurementBasis",
    "MonteCarloStats",
    "NORM_TOL",
    "NegativeAlpha",
    "NonNormalizedTarget",
    "NonUnitary",
    "Outcome",
    "PAULI_X",
    "ROT90",
    "RowSource",
    "SQRT_HALF",
    "SUCCESS_TOL",
    "SameQubit",
    "StateVector",
    "TargetCase",
    "TargetSpec",
    "TrialRecord",
    "UNITARY_TOL",
    "ZeroProbabilityBranch",
    "alice_encode",
    "append_ancillas",
    "apply_1q",
    "apply_cnot",
    "basis_from_target",
    "bob_act",
    "build_target_state",
    "canonicalize_target",
    "check_decomposition",
    "classify_case",
    "cnot_fanout",
    "emit_comparison_table",
    "exact_analyze",
    "fidelity_mod_phase",
    "make_bell",
    "measure_in_basis",
    "monte_carlo",
    "run_trial",
    "target_basis",
    "trial_rng",
]
