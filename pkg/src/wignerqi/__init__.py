"""Wigner-rotation effects on three-qubit GHZ and W states.

Library for transforming the four canonical three-qubit states under
per-qubit Wigner rotations and quantifying the result: fidelities against
the untransformed states, pairwise channel capacities and their average,
Wootters concurrence, and the three-tangle. Includes deterministic grid
sweeps with CSV output (see ``wignerqi.cli`` or the ``wignerqi`` command)
and slow reference implementations in ``wignerqi.oracle`` for testing.
"""

from .lorentz import (
    MomentumConfig,
    WignerAngles,
    WTableReport,
    audit_w_coefficient_table,
    ghz_coefficients,
    momentum_traced_channel,
    product_transform,
    w_coefficients,
    w_variant_coefficients,
    wigner_unitary,
)
from .measures import (
    CapacityBreakdown,
    CapacityClampWarning,
    TangleBreakdown,
    average_capacity,
    concurrence,
    fidelity_pure,
    fidelity_vs_target,
    one_tangle,
    pair_capacity,
    three_tangle,
    von_neumann_entropy,
)
from .qmath import (
    NumericValidationError,
    det2,
    eig_hermitian,
    kron,
    matrix_sqrt_psd,
    partial_trace,
)
from .states import (
    STATE_TAGS,
    DensityDiagnostics,
    DensityOperator,
    PureState,
    make_state,
    reduced,
    to_density,
    validate_density,
)
from .sweep import (
    MEASURE_IDS,
    MeasureRecord,
    SweepGrid,
    parse_angle,
    run_figure,
    run_sweep,
    write_csv,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityBreakdown",
    "CapacityClampWarning",
    "DensityDiagnostics",
    "DensityOperator",
    "MEASURE_IDS",
    "MeasureRecord",
    "MomentumConfig",
    "NumericValidationError",
    "PureState",
    "STATE_TAGS",
    "SweepGrid",
    "TangleBreakdown",
    "WTableReport",
    "WignerAngles",
    "audit_w_coefficient_table",
    "average_capacity",
    "concurrence",
    "det2",
    "eig_hermitian",
    "fidelity_pure",
    "fidelity_vs_target",
    "ghz_coefficients",
    "kron",
    "make_state",
    "matrix_sqrt_psd",
    "momentum_traced_channel",
    "one_tangle",
    "pair_capacity",
    "parse_angle",
    "partial_trace",
    "product_transform",
    "reduced",
    "run_figure",
    "run_sweep",
    "three_tangle",
    "to_density",
    "validate_density",
    "von_neumann_entropy",
    "w_coefficients",
    "w_variant_coefficients",
    "wigner_unitary",
    "write_csv",
]
