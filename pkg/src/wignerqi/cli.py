"""Command-line front end: general sweeps and preset dataset generation.

Exit codes: 0 success, 2 usage error, 3 I/O error, 4 numeric validation
failure.
"""

from __future__ import annotations

import argparse
import sys

from .qmath import NumericValidationError
from .states import STATE_TAGS
from .sweep import (
    AngleParseError,
    FIGURE_NAMES,
    MEASURE_IDS,
    MODES,
    parse_angle,
    parse_axis,
    parse_tie,
    run_figure,
    run_sweep,
    write_csv,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NUMERIC = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wignerqi",
        description="Sweep Wigner angles over three-qubit GHZ/W states and emit CSV datasets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="general sweep over angle grids")
    sweep.add_argument("--state", required=True, choices=STATE_TAGS)
    sweep.add_argument("--mode", default="pure", choices=MODES)
    sweep.add_argument("--alpha", default="0", help="momentum superposition weight, e.g. 0.25pi")
    sweep.add_argument("--omega1", default=None, help="angle or grid start:stop:count, e.g. 0:2pi:257")
    sweep.add_argument("--omega2", default=None)
    sweep.add_argument("--omega3", default=None)
    sweep.add_argument(
        "--tie",
        action="append",
        default=[],
        metavar="FOLLOWER=LEADER",
        help="tie one angle axis to another, e.g. omega2=omega1 (repeatable)",
    )
    sweep.add_argument("--convention", default="opposite", choices=("opposite", "same"))
    sweep.add_argument("--measure", action="append", required=True, help="measure id, comma-separable")
    sweep.add_argument("--out", required=True, help="destination CSV path")

    figure = sub.add_parser("figure", help="run a preset sweep configuration")
    figure.add_argument("name", choices=FIGURE_NAMES)
    figure.add_argument("--out-dir", required=True, help="directory for the per-measure CSV files")
    return parser


def _usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _run_sweep_command(args) -> int:
    measures = [m for chunk in args.measure for m in chunk.split(",") if m]
    for measure in measures:
        if measure not in MEASURE_IDS:
            return _usage(f"unknown measure {measure!r}; expected one of {MEASURE_IDS}")
    try:
        ties = [parse_tie(t) for t in args.tie]
        alpha = parse_angle(args.alpha)
        axes = {}
        for axis in ("omega1", "omega2", "omega3"):
            token = getattr(args, axis)
            if token is not None and any(axis == follower for follower, _ in ties):
                return _usage(f"axis {axis} is tied, drop its --{axis} argument")
            axes[axis] = 0.0 if token is None else parse_axis(token)
        records = run_sweep(
            args.state,
            measures,
            mode=args.mode,
            alpha=alpha,
            ties=ties,
            convention=args.convention,
            **axes,
        )
    except NumericValidationError as exc:
        print(f"numeric validation failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (AngleParseError, ValueError) as exc:
        return _usage(str(exc))
    try:
        count = write_csv(records, args.out)
    except OSError as exc:
        print(f"I/O error writing {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {count} rows to {args.out}")
    return EXIT_OK


def _run_figure_command(args) -> int:
    try:
        written = run_figure(args.name, args.out_dir)
    except NumericValidationError as exc:
        print(f"numeric validation failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        return _usage(str(exc))
    except OSError as exc:
        print(f"I/O error under {args.out_dir}: {exc}", file=sys.stderr)
        return EXIT_IO
    for path, count in written:
        print(f"wrote {count} rows to {path}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has already printed the message
        return int(exc.code or 0)
    if args.command == "sweep":
        return _run_sweep_command(args)
    return _run_figure_command(args)


if __name__ == "__main__":
    sys.exit(main())
