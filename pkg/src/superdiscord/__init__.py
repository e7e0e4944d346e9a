"""Super quantum discord and weak-measurement correlation numerics."""

from .discord import (
    DiscordReport,
    OptimizerConfig,
    ResurrectionRecord,
    analyze,
    extra_correlation,
    minimize_conditional_entropy,
    normal_discord,
    quantum_conditional_entropy,
    strong_conditional_entropy,
    super_discord,
    verify_resurrection,
    weak_conditional_entropy,
)
from .families import (
    bell,
    oracle_post_pure_wce,
    oracle_pure_delta,
    oracle_werner,
    pure_schmidt,
    random_state,
    werner,
)
from .measure import (
    INFINITY,
    MeasurementOutcome,
    QubitBasis,
    WeakOperatorPair,
    project_state,
    projective_outcomes,
    projectors,
    weak_outcomes,
    weak_pair,
)
from .qstate import (
    DensityMatrix,
    mutual_information,
    partial_trace_a,
    partial_trace_b,
    tensor,
    validate,
    von_neumann_entropy,
)

__all__ = [
    "DensityMatrix",
    "DiscordReport",
    "INFINITY",
    "MeasurementOutcome",
    "OptimizerConfig",
    "QubitBasis",
    "ResurrectionRecord",
    "WeakOperatorPair",
    "analyze",
    "bell",
    "extra_correlation",
    "minimize_conditional_entropy",
    "mutual_information",
    "normal_discord",
    "oracle_post_pure_wce",
    "oracle_pure_delta",
    "oracle_werner",
    "partial_trace_a",
    "partial_trace_b",
    "project_state",
    "projective_outcomes",
    "projectors",
    "pure_schmidt",
    "quantum_conditional_entropy",
    "random_state",
    "strong_conditional_entropy",
    "super_discord",
    "tensor",
    "validate",
    "verify_resurrection",
    "von_neumann_entropy",
    "weak_conditional_entropy",
    "weak_outcomes",
    "weak_pair",
    "werner",
]
