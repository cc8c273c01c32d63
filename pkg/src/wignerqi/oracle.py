"""Slow reference implementations used only by the test suite.

Each routine recomputes a result from its bare definition with explicit
index loops and scalar math, sharing no code with the fast paths it checks.
Performance is a non-goal.
"""

from __future__ import annotations

import math

import numpy as np

from .states import DensityOperator, PureState


def _rotation_entry(omega: float, row: int, col: int) -> float:
    # [[cos, -sin], [sin, cos]] at half angle, one scalar at a time
    half = 0.5 * omega
    if row == col:
        return math.cos(half)
    if row == 0:
        return -math.sin(half)
    return math.sin(half)


def oracle_transform(psi: PureState, angles) -> PureState:
    """Boost a three-qubit state by building the 8x8 matrix entry by entry."""
    if psi.qubit_count != 3:
        raise ValueError(f"oracle_transform expects 3 qubits, got {psi.qubit_count}")
    omegas = [float(o) for o in angles]
    amps = psi.amplitudes
    out = np.zeros(8, dtype=complex)
    for i in range(8):
        total = 0.0 + 0.0j
        for j in range(8):
            entry = 1.0
            for q in range(3):
                row_bit = (i >> (2 - q)) & 1
                col_bit = (j >> (2 - q)) & 1
                entry *= _rotation_entry(omegas[q], row_bit, col_bit)
            total += entry * amps[j]
        out[i] = total
    return PureState(out)


def _embed_bits(value: int, positions, qubit_count: int) -> int:
    # scatter the bits of value (msb first over positions) into a basis index
    index = 0
    for rank, q in enumerate(positions):
        bit = (value >> (len(positions) - 1 - rank)) & 1
        index |= bit << (qubit_count - 1 - q)
    return index


def oracle_partial_trace(rho: DensityOperator, keep) -> DensityOperator:
    """Partial trace by direct index summation, no reshaping tricks."""
    n = rho.qubit_count
    keep = tuple(int(q) for q in keep)
    traced = tuple(q for q in range(n) if q not in keep)
    dim_keep = 2 ** len(keep)
    dim_traced = 2 ** len(traced)
    out = np.zeros((dim_keep, dim_keep), dtype=complex)
    m = rho.matrix
    for a in range(dim_keep):
        for b in range(dim_keep):
            acc = 0.0 + 0.0j
            for t in range(dim_traced):
                i = _embed_bits(a, keep, n) | _embed_bits(t, traced, n)
                j = _embed_bits(b, keep, n) | _embed_bits(t, traced, n)
                acc += m[i, j]
            out[a, b] = acc
    return DensityOperator(out)


def oracle_three_tangle(psi: PureState) -> float:
    """Three-tangle via the degree-4 hyperdeterminant of the amplitude cube.

    tau = 4*|d1 - 2*d2 + 4*d3| over the eight amplitudes a[ijk], with the
    three symmetric degree-4 combinations d1, d2, d3 written out below.
    """
    if psi.qubit_count != 3:
        raise ValueError(f"oracle_three_tangle expects 3 qubits, got {psi.qubit_count}")
    amps = psi.amplitudes

    def a(i, j, k):
        return amps[4 * i + 2 * j + k]

    d1 = (
        a(0, 0, 0) ** 2 * a(1, 1, 1) ** 2
        + a(0, 0, 1) ** 2 * a(1, 1, 0) ** 2
        + a(0, 1, 0) ** 2 * a(1, 0, 1) ** 2
        + a(1, 0, 0) ** 2 * a(0, 1, 1) ** 2
    )
    d2 = (
        a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0)
        + a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0)
        + a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1)
        + a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0)
        + a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1)
        + a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1)
    )
    d3 = (
        a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1)
        + a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0)
    )
    return float(4.0 * abs(d1 - 2.0 * d2 + 4.0 * d3))


def oracle_concurrence_pure(psi: PureState) -> float:
    """Concurrence 2*|a01*a10 - a00*a11| of a pure two-qubit state."""
    if psi.qubit_count != 2:
        raise ValueError(f"oracle_concurrence_pure expects 2 qubits, got {psi.qubit_count}")
    a = psi.amplitudes
    return float(2.0 * abs(a[1] * a[2] - a[0] * a[3]))


def haar_random_state(qubit_count: int, rng: np.random.Generator) -> PureState:
    """Haar-uniform pure state: normalized i.i.d. complex Gaussian amplitudes."""
    dim = 2 ** qubit_count
    amps = rng.standard_normal(dim) + 1.0j * rng.standard_normal(dim)
    return PureState(amps / np.linalg.norm(amps))
