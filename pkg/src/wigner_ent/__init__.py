"""Entanglement of massive spin-1/2 pairs seen from Lorentz-boosted frames."""

from .entanglement import (
    ConcurrenceReport,
    VariationReport,
    closed_form_concurrence,
    concurrence,
    degradation_rate,
    frame_concurrences,
    sign_grid_analysis,
    spin_flip,
    variation,
)
from .kinematics import (
    BoostConfig,
    WignerRotation,
    matched_speed,
    rapidities_from,
    wigner_angle_perpendicular,
    wigner_rotation_general,
)
from .qcore import (
    ContractViolation,
    PauliCoefficients,
    RejectedInput,
    hermitian_eigen,
    matrix_sqrt_psd,
    partial_trace,
    pauli_decompose,
    tensor,
)
from .states import (
    ScenarioKind,
    ScenarioSpec,
    apply_boost,
    build_state,
    d_operators,
    reduced_momentum,
    reduced_spin,
)

__version__ = "0.1.0"
