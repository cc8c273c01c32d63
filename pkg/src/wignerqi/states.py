"""Containers and constructors for pure states and density operators.

The four named three-qubit states swept by this library are built by
:func:`make_state`; everything else is generic plumbing around validated
amplitude vectors and density matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qmath import (
    HERMITIAN_ATOL,
    EIGENVALUE_FLOOR,
    NumericValidationError,
    hermiticity_violation,
    partial_trace,
)

NORM_ATOL = 1e-12
TRACE_ATOL = 1e-10

# Registry of named initial states. |q0 q1 q2> maps to index 4*q0 + 2*q1 + q2.
STATE_TAGS = ("ghz_plus", "ghz_minus", "w", "w_prime")


@dataclass(frozen=True)
class PureState:
    """Unit-norm complex amplitude vector over ``2**qubit_count`` basis kets."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        n = amps.size
        if n == 0 or n & (n - 1):
            raise NumericValidationError(f"amplitude count {n} is not a power of two")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > NORM_ATOL:
            raise NumericValidationError(f"state norm {norm!r} deviates from 1 beyond {NORM_ATOL:.0e}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def qubit_count(self) -> int:
        return int(self.amplitudes.size).bit_length() - 1


@dataclass(frozen=True)
class DensityOperator:
    """Hermitian, trace-one, positive-semidefinite matrix on ``qubit_count`` qubits."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {m.shape}")
        n = m.shape[0]
        if n == 0 or n & (n - 1):
            raise ValueError(f"dimension {n} is not a power of two")
        diag = validate_density(m)
        if not diag.ok:
            raise NumericValidationError(f"invalid density operator: {diag.describe()}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def qubit_count(self) -> int:
        return int(self.matrix.shape[0]).bit_length() - 1


@dataclass(frozen=True)
class DensityDiagnostics:
    """Violation magnitudes reported by :func:`validate_density`."""

    hermiticity_violation: float
    trace_deviation: float
    min_eigenvalue: float

    @property
    def ok(self) -> bool:
        return (
            self.hermiticity_violation <= HERMITIAN_ATOL
            and abs(self.trace_deviation) <= TRACE_ATOL
            and self.min_eigenvalue >= EIGENVALUE_FLOOR
        )

    def describe(self) -> str:
        return (
            f"hermiticity violation {self.hermiticity_violation:.3e}, "
            f"trace deviation {self.trace_deviation:.3e}, "
            f"min eigenvalue {self.min_eigenvalue:.3e}"
        )


def validate_density(matrix) -> DensityDiagnostics:
    """Measure how far ``matrix`` is from a valid density operator.

    Purely diagnostic: accepts any square matrix and reports the worst
    Hermiticity violation, the trace deviation from one, and the most
    negative eigenvalue (of the Hermitian part, so the check is meaningful
    even for slightly asymmetric input).
    """
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    herm = hermiticity_violation(m)
    trace_dev = float((np.trace(m) - 1.0).real)
    hermitian_part = 0.5 * (m + m.conj().T)
    min_eig = float(np.linalg.eigvalsh(hermitian_part).min())
    return DensityDiagnostics(herm, trace_dev, min_eig)


def make_state(tag: str) -> PureState:
    """Build one of the named three-qubit states.

    ``ghz_plus``  (|000> + |111>)/sqrt(2)
    ``ghz_minus`` (|000> - |111>)/sqrt(2)
    ``w``         (|100> + |010> + |001>)/sqrt(3)
    ``w_prime``   (|110> + |101> + |011>)/sqrt(3)
    """
    amps = np.zeros(8, dtype=complex)
    if tag == "ghz_plus":
        amps[0] = amps[7] = 1.0 / math.sqrt(2.0)
    elif tag == "ghz_minus":
        amps[0] = 1.0 / math.sqrt(2.0)
        amps[7] = -1.0 / math.sqrt(2.0)
    elif tag == "w":
        amps[4] = amps[2] = amps[1] = 1.0 / math.sqrt(3.0)
    elif tag == "w_prime":
        amps[3] = amps[5] = amps[6] = 1.0 / math.sqrt(3.0)
    else:
        raise ValueError(f"unknown state tag {tag!r}; expected one of {STATE_TAGS}")
    return PureState(amps)


def to_density(psi: PureState) -> DensityOperator:
    """Rank-one projector |psi><psi| of a pure state."""
    a = psi.amplitudes
    return DensityOperator(np.outer(a, a.conj()))


def reduced(rho: DensityOperator, keep) -> DensityOperator:
    """Partial trace of a density operator down to the qubits in ``keep``."""
    return DensityOperator(partial_trace(rho.matrix, rho.qubit_count, keep))
