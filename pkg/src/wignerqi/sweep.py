"""Parameter sweeps over Wigner-angle grids with deterministic CSV output.

A sweep walks the Cartesian product of inclusive linear grids over the free
angle axes (row-major, omega1 outermost), optionally tying axes together
("omega2=omega1" makes omega2 copy omega1), and evaluates a list of named
measures at each point. Records are emitted in a fixed order so repeated
runs are byte-identical.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .lorentz import MomentumConfig, WignerAngles, momentum_traced_channel, product_transform
from .measures import average_capacity, concurrence, fidelity_pure, fidelity_vs_target, three_tangle, von_neumann_entropy
from .states import STATE_TAGS, make_state, reduced, to_density

TWO_PI = 2.0 * math.pi

AXES = ("omega1", "omega2", "omega3")

MEASURE_IDS = (
    "fidelity_gplus",
    "fidelity_gminus",
    "fidelity_w",
    "fidelity_wprime",
    "avg_capacity",
    "three_tangle",
    "concurrence_ab",
    "concurrence_ac",
    "concurrence_bc",
    "entropy_a",
)

_FIDELITY_TARGETS = {
    "fidelity_gplus": "ghz_plus",
    "fidelity_gminus": "ghz_minus",
    "fidelity_w": "w",
    "fidelity_wprime": "w_prime",
}
_PAIRS = {
    "concurrence_ab": (0, 1),
    "concurrence_ac": (0, 2),
    "concurrence_bc": (1, 2),
}

MODES = ("pure", "traced")


class AngleParseError(ValueError):
    """An angle or grid token could not be parsed."""


_ANGLE_RE = re.compile(r"^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)(pi)?\s*$")


def parse_angle(text: str) -> float:
    """Parse '<float>' or '<float>pi' into radians, e.g. '0.375pi', '2pi', '1.5'."""
    match = _ANGLE_RE.match(text)
    if not match:
        raise AngleParseError(f"malformed angle token {text!r} (expected e.g. '1.5', '0.5pi', '2pi')")
    value = float(match.group(1))
    if match.group(2):
        value *= math.pi
    return value


@dataclass(frozen=True)
class SweepGrid:
    """Inclusive linear grid: ``count`` samples from ``start`` to ``stop``.

    ``count == 1`` means the single value ``start``.
    """

    start: float
    stop: float
    count: int

    def __post_init__(self):
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise ValueError(f"grid endpoints must be finite, got {self.start!r}:{self.stop!r}")
        if int(self.count) != self.count or self.count < 1:
            raise ValueError(f"grid count must be an integer >= 1, got {self.count!r}")
        if self.stop < self.start:
            raise ValueError(f"grid stop {self.stop!r} is below start {self.start!r}")

    def values(self) -> np.ndarray:
        if self.count == 1:
            return np.array([self.start])
        return np.linspace(self.start, self.stop, self.count)


def parse_axis(text: str):
    """Parse an axis token: either a single angle or 'start:stop:count'."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise AngleParseError(f"malformed grid token {text!r} (expected start:stop:count)")
        start = parse_angle(parts[0])
        stop = parse_angle(parts[1])
        try:
            count = int(parts[2])
        except ValueError:
            raise AngleParseError(f"malformed grid count {parts[2]!r} in {text!r}") from None
        return SweepGrid(start, stop, count)
    return parse_angle(text)


@dataclass(frozen=True)
class MeasureRecord:
    """One sweep sample: which state and angles, which measure, what value."""

    state: str
    alpha: float
    omega1: float
    omega2: float
    omega3: float
    measure: str
    value: float


def parse_tie(text: str) -> tuple[str, str]:
    """Parse 'follower=leader' into an axis pair."""
    parts = text.split("=")
    if len(parts) != 2 or parts[0] not in AXES or parts[1] not in AXES:
        raise ValueError(f"malformed tie {text!r} (expected e.g. omega2=omega1)")
    follower, leader = parts
    if follower == leader:
        raise ValueError(f"tie {text!r} binds an axis to itself")
    return follower, leader


def _resolve_ties(ties) -> dict[str, str]:
    tie_map: dict[str, str] = {}
    for tie in ties:
        follower, leader = parse_tie(tie) if isinstance(tie, str) else tie
        if follower not in AXES or leader not in AXES or follower == leader:
            raise ValueError(f"invalid tie {(follower, leader)!r}")
        if follower in tie_map:
            raise ValueError(f"axis {follower!r} is tied twice")
        tie_map[follower] = leader
    for follower in tie_map:
        seen = {follower}
        leader = tie_map[follower]
        while leader in tie_map:
            if leader in seen:
                raise ValueError(f"tie cycle involving {follower!r}")
            seen.add(leader)
            leader = tie_map[leader]
    return tie_map


def _evaluate(measure: str, mode: str, psi_transformed, rho):
    if measure in _FIDELITY_TARGETS:
        target = make_state(_FIDELITY_TARGETS[measure])
        if mode == "pure":
            return fidelity_pure(psi_transformed, target)
        return fidelity_vs_target(rho, target)
    if measure == "avg_capacity":
        return average_capacity(rho).average
    if measure == "three_tangle":
        return three_tangle(psi_transformed).three_tangle
    if measure in _PAIRS:
        return concurrence(reduced(rho, _PAIRS[measure]))
    if measure == "entropy_a":
        return von_neumann_entropy(reduced(rho, (0,)))
    raise ValueError(f"unknown measure {measure!r}")


def run_sweep(
    state: str,
    measures,
    *,
    mode: str = "pure",
    alpha: float = 0.0,
    omega1=0.0,
    omega2=0.0,
    omega3=0.0,
    ties=(),
    convention: str = "opposite",
) -> list[MeasureRecord]:
    """Evaluate measures over an angle grid and return records in grid order.

    Each of ``omega1``..``omega3`` is either a fixed angle in radians or a
    :class:`SweepGrid`; axes named as tie followers take their leader's
    current value instead. Free axes iterate row-major with omega1 outermost.
    In ``traced`` mode the state is sent through the momentum-superposed
    channel at weight ``alpha`` before measuring; ``three_tangle`` is only
    defined for the pure mode.
    """
    if state not in STATE_TAGS:
        raise ValueError(f"unknown state {state!r}; expected one of {STATE_TAGS}")
    if mode == "momentum_traced":
        mode = "traced"
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    measures = list(measures)
    if not measures:
        raise ValueError("at least one measure is required")
    for measure in measures:
        if measure not in MEASURE_IDS:
            raise ValueError(f"unknown measure {measure!r}; expected one of {MEASURE_IDS}")
    if mode == "traced" and "three_tangle" in measures:
        raise ValueError("three_tangle is undefined for the traced (mixed) mode; request it in pure mode")

    tie_map = _resolve_ties(ties)
    specs = {"omega1": omega1, "omega2": omega2, "omega3": omega3}
    free_axes = [axis for axis in AXES if axis not in tie_map]
    grids = {}
    for axis in free_axes:
        spec = specs[axis]
        grids[axis] = spec.values() if isinstance(spec, SweepGrid) else np.array([float(spec)])

    psi0 = make_state(state)
    alpha = float(alpha)
    records: list[MeasureRecord] = []
    for values in itertools.product(*(grids[axis] for axis in free_axes)):
        point = dict(zip(free_axes, (float(v) for v in values)))
        for follower in AXES:
            if follower in tie_map:
                leader = tie_map[follower]
                while leader in tie_map:
                    leader = tie_map[leader]
                point[follower] = point[leader]
        angles = WignerAngles(point["omega1"], point["omega2"], point["omega3"])
        if mode == "pure":
            psi_t = product_transform(psi0, angles)
            rho = to_density(psi_t)
        else:
            psi_t = None
            rho = momentum_traced_channel(psi0, angles, MomentumConfig(alpha, convention))
        for measure in measures:
            value = _evaluate(measure, mode, psi_t, rho)
            records.append(
                MeasureRecord(state, alpha, angles.omega1, angles.omega2, angles.omega3, measure, float(value))
            )
    return records


CSV_HEADER = "state,alpha,omega1,omega2,omega3,measure,value"


def _fmt(value: float) -> str:
    value = float(value)
    if value == 0.0:
        value = 0.0  # normalize -0.0
    return format(value, ".12g")


def write_csv(records, destination) -> int:
    """Write records as CSV with a fixed header; returns the data row count.

    Floats are rendered with 12 significant digits, '.' decimal separator,
    LF line endings; identical inputs produce byte-identical files.
    """
    path = Path(destination)
    count = 0
    with open(path, "w", encoding="ascii", newline="\n") as handle:
        handle.write(CSV_HEADER + "\n")
        for record in records:
            handle.write(
                f"{record.state},{_fmt(record.alpha)},{_fmt(record.omega1)},"
                f"{_fmt(record.omega2)},{_fmt(record.omega3)},{record.measure},{_fmt(record.value)}\n"
            )
            count += 1
    return count


# Preset sweep configurations. 1D slices use 257 points over [0, 2pi]
# (256 intervals, so 0, pi/2, pi, 3pi/2, 2pi land exactly on nodes); 2D
# surfaces use 129x129 for the same landmark property at a sane file size.
_GRID_1D = SweepGrid(0.0, TWO_PI, 257)
_GRID_2D = SweepGrid(0.0, TWO_PI, 129)
_OMEGA3_FAMILY = (0.0, math.pi / 3.0, math.pi / 4.0, math.pi / 6.0)
_TRACED_ALPHA = math.pi / 4.0

_SURFACES = {
    "1a": ("ghz_plus", "fidelity_gplus"),
    "1b": ("ghz_plus", "fidelity_gminus"),
    "2a": ("w", "fidelity_w"),
    "2b": ("w", "fidelity_wprime"),
}
_SLICES = {
    "1c": ("ghz_plus", ("fidelity_gplus", "fidelity_gminus")),
    "2c": ("w", ("fidelity_w", "fidelity_wprime")),
}
_FAMILIES = {
    "3a": ("ghz_plus", "capacity"),
    "3b": ("w", "capacity"),
    "4a": ("ghz_plus", "tangle"),
    "4b": ("w", "tangle"),
}

FIGURE_NAMES = ("1a", "1b", "1c", "2a", "2b", "2c", "3a", "3b", "4a", "4b")


def _suffixed(records, suffix: str) -> list[MeasureRecord]:
    return [dataclasses.replace(r, measure=f"{r.measure}.{suffix}") for r in records]


def figure_records(name: str) -> dict[str, list[MeasureRecord]]:
    """Records for one preset, grouped by (possibly suffixed) measure id.

    Surface presets (1a, 1b, 2a, 2b) sweep omega1 and omega3 over a 129x129
    grid with omega2 tied to omega1. Slice presets (1c, 2c) tie all three
    angles and sweep 257 points. Family presets (3a, 3b, 4a, 4b) sweep the
    tied pair over 257 points for each fixed omega3 in {0, pi/3, pi/4, pi/6},
    in both pure mode (suffix '.pure'; constant in the angles by local-unitary
    invariance) and the momentum-traced mode at alpha = pi/4 (suffix
    '.traced'; angle-dependent). The traced runs of 4a/4b report pairwise
    concurrences since the three-tangle is undefined for mixed states.
    """
    groups: dict[str, list[MeasureRecord]] = {}
    if name in _SURFACES:
        state, measure = _SURFACES[name]
        groups[measure] = run_sweep(
            state, [measure], omega1=_GRID_2D, omega3=_GRID_2D, ties=("omega2=omega1",)
        )
    elif name in _SLICES:
        state, measures = _SLICES[name]
        records = run_sweep(
            state, list(measures), omega1=_GRID_1D, ties=("omega2=omega1", "omega3=omega1")
        )
        for measure in measures:
            groups[measure] = [r for r in records if r.measure == measure]
    elif name in _FAMILIES:
        state, family = _FAMILIES[name]
        pure_measures = ["avg_capacity"] if family == "capacity" else ["three_tangle"]
        traced_measures = (
            ["avg_capacity"] if family == "capacity" else ["concurrence_ab", "concurrence_ac", "concurrence_bc"]
        )
        for omega3 in _OMEGA3_FAMILY:
            pure = run_sweep(state, pure_measures, omega1=_GRID_1D, omega3=omega3, ties=("omega2=omega1",))
            for record in _suffixed(pure, "pure"):
                groups.setdefault(record.measure, []).append(record)
            traced = run_sweep(
                state,
                traced_measures,
                mode="traced",
                alpha=_TRACED_ALPHA,
                omega1=_GRID_1D,
                omega3=omega3,
                ties=("omega2=omega1",),
            )
            for record in _suffixed(traced, "traced"):
                groups.setdefault(record.measure, []).append(record)
    else:
        raise ValueError(f"unknown figure preset {name!r}; expected one of {FIGURE_NAMES}")
    return groups


def run_figure(name: str, out_dir) -> list[tuple[Path, int]]:
    """Run a preset and write one CSV per measure id into ``out_dir``."""
    out_path = Path(out_dir)
    out_path.mkdir(parents=True, exist_ok=True)
    written = []
    for measure_id, records in figure_records(name).items():
        path = out_path / f"fig{name}_{measure_id.replace('.', '_')}.csv"
        count = write_csv(records, path)
        written.append((path, count))
    return written
