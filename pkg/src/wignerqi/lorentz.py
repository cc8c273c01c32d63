"""Wigner-rotation action of a Lorentz boost on three spin qubits.

A boost observed from a moving frame rotates the spin of each massive
particle through a momentum-dependent Wigner angle. With all momenta along
the z axis the per-particle action is a real rotation by half the Wigner
angle, and a product of three such rotations carries any three-qubit state
into its boosted form. This module provides that transform, closed-form
expansions of the transformed GHZ and W amplitudes, and the mixed channel
obtained when the boost acts on a two-branch momentum superposition whose
spin part is then read out alone.

A note on the closed-form W table: a transcription of these eight
amplitudes circulates in which the entries are actually the expansion of
the bit-flipped partner state (``w_prime``) in five of eight slots, and the
remaining three slots carry typos that break normalization (two entries are
textually identical). :func:`audit_w_coefficient_table` evaluates that
variant literally and reports exactly which entries disagree with the
direct tensor computation. The corresponding GHZ table is sound except for
one garbled entry, whose corrected form ``(s1*c2*c3 + c1*s2*s3)/sqrt(2)``
is what :func:`ghz_coefficients` evaluates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .qmath import kron
from .states import DensityOperator, PureState, make_state, to_density

#: Branch conventions for the momentum-superposed channel: ``opposite`` flips
#: the sign of every Wigner angle on the reversed-momentum branch, ``same``
#: applies identical angles to both branches (and so stays pure).
OPPOSITE = "opposite"
SAME = "same"
BRANCH_CONVENTIONS = (OPPOSITE, SAME)


class WignerAngles(NamedTuple):
    """Per-qubit Wigner rotation angles, in radians."""

    omega1: float
    omega2: float
    omega3: float


@dataclass(frozen=True)
class MomentumConfig:
    """Weight and sign convention of the two momentum branches.

    ``alpha`` sets the branch weights cos(alpha)**2 and sin(alpha)**2;
    ``branch_sign_convention`` picks how the Wigner angles depend on the
    momentum direction of the second branch.
    """

    alpha: float
    branch_sign_convention: str = OPPOSITE

    def __post_init__(self):
        if not math.isfinite(self.alpha):
            raise ValueError(f"alpha must be finite, got {self.alpha!r}")
        if self.branch_sign_convention not in BRANCH_CONVENTIONS:
            raise ValueError(
                f"unknown branch convention {self.branch_sign_convention!r}; "
                f"expected one of {BRANCH_CONVENTIONS}"
            )


def wigner_unitary(omega: float) -> np.ndarray:
    """Single-qubit Wigner rotation [[c, -s], [s, c]] at half angle omega/2."""
    if not math.isfinite(omega):
        raise ValueError(f"angle must be finite, got {omega!r}")
    c = math.cos(0.5 * omega)
    s = math.sin(0.5 * omega)
    return np.array([[c, -s], [s, c]], dtype=complex)


def _as_angles(angles) -> WignerAngles:
    o1, o2, o3 = angles
    return WignerAngles(float(o1), float(o2), float(o3))


def product_transform(psi: PureState, angles) -> PureState:
    """Apply D(omega1) x D(omega2) x D(omega3) to a three-qubit state."""
    if psi.qubit_count != 3:
        raise ValueError(f"product_transform acts on 3 qubits, got {psi.qubit_count}")
    o1, o2, o3 = _as_angles(angles)
    u = kron(wigner_unitary(o1), wigner_unitary(o2), wigner_unitary(o3))
    return PureState(u @ psi.amplitudes)


def _half_trig(angles):
    o1, o2, o3 = _as_angles(angles)
    return (
        math.cos(0.5 * o1), math.sin(0.5 * o1),
        math.cos(0.5 * o2), math.sin(0.5 * o2),
        math.cos(0.5 * o3), math.sin(0.5 * o3),
    )


def ghz_coefficients(angles) -> np.ndarray:
    """Closed-form amplitudes of the boosted ghz_plus state.

    Componentwise equal to ``product_transform(make_state("ghz_plus"), angles)``;
    kept as an explicit trigonometric expansion so the two routes check each
    other.
    """
    c1, s1, c2, s2, c3, s3 = _half_trig(angles)
    r = 1.0 / math.sqrt(2.0)
    return np.array(
        [
            (c1 * c2 * c3 - s1 * s2 * s3) * r,
            (c1 * c2 * s3 + s1 * s2 * c3) * r,
            (c1 * s2 * c3 + s1 * c2 * s3) * r,
            (c1 * s2 * s3 - s1 * c2 * c3) * r,
            (s1 * c2 * c3 + c1 * s2 * s3) * r,
            (s1 * c2 * s3 - c1 * s2 * c3) * r,
            (s1 * s2 * c3 - c1 * c2 * s3) * r,
            (c1 * c2 * c3 + s1 * s2 * s3) * r,
        ],
        dtype=complex,
    )


def w_coefficients(angles) -> np.ndarray:
    """Closed-form amplitudes of the boosted w state (direct expansion)."""
    c1, s1, c2, s2, c3, s3 = _half_trig(angles)
    r = 1.0 / math.sqrt(3.0)
    return np.array(
        [
            -(s1 * c2 * c3 + c1 * s2 * c3 + c1 * c2 * s3) * r,
            (c1 * c2 * c3 - s1 * c2 * s3 - c1 * s2 * s3) * r,
            (c1 * c2 * c3 - s1 * s2 * c3 - c1 * s2 * s3) * r,
            (c1 * c2 * s3 + c1 * s2 * c3 - s1 * s2 * s3) * r,
            (c1 * c2 * c3 - s1 * s2 * c3 - s1 * c2 * s3) * r,
            (c1 * c2 * s3 + s1 * c2 * c3 - s1 * s2 * s3) * r,
            (c1 * s2 * c3 + s1 * c2 * c3 - s1 * s2 * s3) * r,
            (c1 * s2 * s3 + s1 * c2 * s3 + s1 * s2 * c3) * r,
        ],
        dtype=complex,
    )


def w_variant_coefficients(angles) -> np.ndarray:
    """The erratic transcription of the boosted-w amplitude table, verbatim.

    Rows 1 and 2 repeat the same expression twice (the literal duplicated
    term is preserved here) and row 4 breaks normalization. Exists only so
    :func:`audit_w_coefficient_table` can diff it against the direct
    transform; do not use it for physics.
    """
    c1, s1, c2, s2, c3, s3 = _half_trig(angles)
    r = 1.0 / math.sqrt(3.0)
    return np.array(
        [
            (s1 * c2 * s3 + s1 * s2 * c3 + c1 * s2 * s3) * r,
            (s1 * s2 * s3 - s1 * c2 * c3 - s1 * c2 * c3) * r,
            (s1 * s2 * s3 - s1 * c2 * c3 - s1 * c2 * c3) * r,
            (c1 * c2 * c3 - s1 * s2 * c3 - s1 * c2 * s3) * r,
            (s1 * s2 * s3 - c1 * s2 * c3 - c1 * c2 * c3) * r,
            (c1 * c2 * c3 - s1 * s2 * c3 - c1 * s2 * s3) * r,
            (c1 * c2 * c3 - s1 * c2 * s3 - c1 * s2 * s3) * r,
            (s1 * c2 * c3 + c1 * s2 * c3 + c1 * c2 * s3) * r,
        ],
        dtype=complex,
    )


@dataclass(frozen=True)
class WTableReport:
    """Outcome of diffing the erratic w table against direct transforms."""

    angles: WignerAngles
    mismatched_indices: tuple[int, ...]
    matches_flipped_partner: tuple[int, ...]
    max_abs_deviation: float


def audit_w_coefficient_table(angles, atol: float = 1e-12) -> WTableReport:
    """Compare the erratic w table entry by entry against direct transforms.

    ``mismatched_indices`` lists the amplitude slots where the variant table
    disagrees with ``product_transform`` of the w state at these angles (at
    generic angles: all eight). ``matches_flipped_partner`` lists the slots
    where it instead reproduces the transform of ``w_prime`` (at generic
    angles: slots 0, 3, 5, 6, 7; the other three carry typos).
    """
    angles = _as_angles(angles)
    variant = w_variant_coefficients(angles)
    direct_w = product_transform(make_state("w"), angles).amplitudes
    direct_wp = product_transform(make_state("w_prime"), angles).amplitudes
    dev = np.abs(variant - direct_w)
    mism = tuple(int(i) for i in range(8) if dev[i] > atol)
    flipped = tuple(int(i) for i in range(8) if abs(variant[i] - direct_wp[i]) <= atol)
    return WTableReport(angles, mism, flipped, float(dev.max()))


def momentum_traced_channel(psi: PureState, angles, config: MomentumConfig) -> DensityOperator:
    """Spin state left after boosting a two-branch momentum superposition.

    The forward branch (weight cos(alpha)**2) is transformed at the given
    angles; the reversed branch (weight sin(alpha)**2) at the same angles or
    their negatives depending on ``config.branch_sign_convention``. Reading
    out the spin part alone mixes the two branch projectors, so for the
    ``opposite`` convention and alpha not a multiple of pi/2 the output is
    generally mixed.
    """
    angles = _as_angles(angles)
    forward = product_transform(psi, angles)
    if config.branch_sign_convention == OPPOSITE:
        reversed_branch = product_transform(
            psi, WignerAngles(-angles.omega1, -angles.omega2, -angles.omega3)
        )
    else:
        reversed_branch = forward
    w_forward = math.cos(config.alpha) ** 2
    w_reversed = math.sin(config.alpha) ** 2
    rho = w_forward * to_density(forward).matrix + w_reversed * to_density(reversed_branch).matrix
    return DensityOperator(rho)
