# How close does a boosted GHZ or W state stay to where it started?
#
# Sweeps the equal-angle line Omega1 = Omega2 = Omega3 = Omega and prints the
# landmarks of the four fidelity curves, then locates the first angle at which
# the W fidelity touches zero.

import math

import numpy as np

from wignerqi import SweepGrid, fidelity_pure, make_state, product_transform, run_sweep

GRID = SweepGrid(0.0, 2 * math.pi, 257)

records = run_sweep(
    "ghz_plus",
    ["fidelity_gplus", "fidelity_gminus"],
    omega1=GRID,
    ties=("omega2=omega1", "omega3=omega1"),
)
f_plus = np.array([r.value for r in records if r.measure == "fidelity_gplus"])
f_minus = np.array([r.value for r in records if r.measure == "fidelity_gminus"])

records = run_sweep(
    "w",
    ["fidelity_w", "fidelity_wprime"],
    omega1=GRID,
    ties=("omega2=omega1", "omega3=omega1"),
)
f_w = np.array([r.value for r in records if r.measure == "fidelity_w"])
f_wp = np.array([r.value for r in records if r.measure == "fidelity_wprime"])

omegas = GRID.values()
print("equal-angle fidelities (Omega/pi, F_g+, F_g-, F_w, F_w'):")
for k in (0, 32, 64, 96, 128, 160, 192, 224, 256):
    print(
        f"  {omegas[k] / math.pi:5.3f}   {f_plus[k]:8.5f} {f_minus[k]:8.5f}"
        f" {f_w[k]:8.5f} {f_wp[k]:8.5f}"
    )

# The GHZ curve is cos^6(Omega/2): zero exactly at Omega = pi, back to 1 at 2 pi.
print(f"\nmax |F_g+ - cos^6(Omega/2)| over the grid: "
      f"{np.max(np.abs(f_plus - np.cos(omegas / 2) ** 6)):.2e}")

# Whenever one curve of a pair peaks, the partner curve dies: the boost turns
# each state into an equivalent one rather than destroying it.
print(f"F_g- at Omega = pi: {f_minus[128]:.6f}   (F_g+ there: {f_plus[128]:.2e})")
print(f"F_w' at Omega = pi: {f_wp[128]:.6f}   (F_w  there: {f_w[128]:.2e})")

# First zero of F_w: bisect the signed overlap <w|boosted w>.
w = make_state("w")


def overlap(omega):
    boosted = product_transform(w, (omega, omega, omega))
    return float(np.vdot(w.amplitudes, boosted.amplitudes).real)


lo, hi = 0.0, math.pi
for _ in range(60):
    mid = 0.5 * (lo + hi)
    if overlap(mid) > 0:
        lo = mid
    else:
        hi = mid
first_zero = 0.5 * (lo + hi)
print(f"\nfirst zero of F_w on the equal-angle line: Omega = {first_zero / math.pi:.5f} pi")
print(f"closed form 2*arctan(1/sqrt(2))         : Omega = {2 * math.atan(1 / math.sqrt(2)) / math.pi:.5f} pi")
print(f"F_w at that angle: {fidelity_pure(w, product_transform(w, (first_zero,) * 3)):.2e}")
