"""Command-line front end: decompose and filter subcommands.

Exit codes: 0 success, 1 invalid arguments, 2 I/O failure, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .csvio import read_csv, write_csv
from .filtering import FilterCriteria, filter_series
from .imd import RefinementConfig, decompose
from .series import TimeSeries
from .signals import synth
from .svgplot import render_svg

__all__ = ["main", "run_decompose", "run_filter", "RunManifest", "format_mode_line"]


class CliError(Exception):
    """Carries the process exit code alongside the message."""

    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class RunManifest:
    input: str
    subcommand: str
    config: dict = field(default_factory=dict)
    lines: tuple = ()


def format_mode_line(k: int, extrema_count: int, value_range: tuple, iterations: int,
                     final_delta: float, delta_time: float) -> str:
    lo, hi = value_range
    return (
        f"IMF component {k}, Extrema count: {extrema_count}, "
        f"Value range: [{lo:.3f}, {hi:.3f}], Iterations: {iterations}, "
        f"Delta: {final_delta:.6f} at {delta_time:.2f}"
    )


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad flags by default; the contract here is 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _jump_block(text: str) -> tuple:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}")
    try:
        pair = (float(lo), float(hi))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected numeric lo:hi, got {text!r}") from None
    if not pair[0] < pair[1]:
        raise argparse.ArgumentTypeError(f"need lo < hi in {text!r}")
    return pair


def _add_io_arguments(sub: argparse.ArgumentParser) -> None:
    source = sub.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", metavar="CSV", help="input series file")
    source.add_argument("--synth", metavar="KIND",
                        help="generate input: two_cosine, sinusoid, random_walk, riding_wave")
    sub.add_argument("--output-dir", default=".", metavar="DIR")
    sub.add_argument("--span", type=float, default=None, help="synthetic signal span")
    sub.add_argument("--step", type=float, default=None, help="synthetic sample step")
    sub.add_argument("--seed", type=int, default=None, help="random_walk seed")
    sub.add_argument("--amplitude", type=float, default=None, help="sinusoid amplitude")
    sub.add_argument("--period", type=float, default=None, help="sinusoid period")
    sub.add_argument("--phase", type=float, default=None, help="sinusoid phase")
    sub.add_argument("--plot", action="store_true", help="also write an SVG chart")


def _add_refinement_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--max-modes", type=int, default=16)
    sub.add_argument("--max-iters", type=int, default=12)
    sub.add_argument("--delta-tol", type=float, default=None,
                     help="absolute stop tolerance; default 1e-3 of the value range")
    sub.add_argument("--extension", choices=("even", "odd", "cyclic"), default="even")


def build_parser() -> _Parser:
    parser = _Parser(prog="fastimd", description="Intrinsic mode decomposition and filtering.")
    commands = parser.add_subparsers(dest="command", required=True)

    dec = commands.add_parser("decompose", help="split a series into modes and a residue")
    _add_io_arguments(dec)
    _add_refinement_arguments(dec)
    dec.add_argument("--init", choices=("derivative", "data"), default="derivative",
                     help="initial residue: derivative inflection points, or the data itself")

    flt = commands.add_parser("filter", help="remove modes by jump time or amplitude")
    _add_io_arguments(flt)
    _add_refinement_arguments(flt)
    flt.add_argument("--block-jump", type=_jump_block, action="append", default=[],
                     metavar="LO:HI", help="block extrema with edge jump time in [LO, HI)")
    flt.add_argument("--amp-floor", type=float, default=0.0,
                     help="block extrema with 0 < |value| < AMP_FLOOR")
    flt.add_argument("--max-passes", type=int, default=8)
    return parser


def _load_input(args: argparse.Namespace) -> tuple:
    if args.input is not None:
        try:
            return read_csv(args.input), args.input
        except OSError as exc:
            raise CliError(2, str(exc)) from exc
        except ValueError as exc:
            raise CliError(2, str(exc)) from exc
    params = {}
    for name in ("span", "step", "seed", "amplitude", "period", "phase"):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    try:
        return synth(args.synth, **params), f"synth:{args.synth}"
    except (ValueError, TypeError) as exc:
        raise CliError(1, str(exc)) from exc


def _refinement_config(args: argparse.Namespace, initialization: str) -> RefinementConfig:
    try:
        return RefinementConfig(
            max_iterations=args.max_iters,
            delta_tolerance=args.delta_tol,
            extension=args.extension,
            initialization=initialization,
        )
    except ValueError as exc:
        raise CliError(1, str(exc)) from exc


def _prepare_output_dir(path: str) -> None:
    try:
        os.makedirs(path, exist_ok=True)
    except OSError as exc:
        raise CliError(2, str(exc)) from exc


def _write_series(path: str, series: TimeSeries) -> None:
    if not np.all(np.isfinite(series.values)):
        raise CliError(3, f"non-finite values in {os.path.basename(path)}")
    try:
        write_csv(series, path)
    except OSError as exc:
        raise CliError(2, str(exc)) from exc


def run_decompose(args: argparse.Namespace) -> int:
    try:
        data, source = _load_input(args)
        cfg = _refinement_config(args, "data_function" if args.init == "data" else "derivative")
        if args.max_modes < 1:
            raise CliError(1, "--max-modes must be at least 1")
        _prepare_output_dir(args.output_dir)
        result = decompose(data, cfg, max_modes=args.max_modes)

        lines = []
        chart = {"input": data}
        for k, mode in enumerate(result.modes, start=1):
            _write_series(os.path.join(args.output_dir, f"imf_{k}.csv"), mode.imf)
            _write_series(os.path.join(args.output_dir, f"residue_{k}.csv"), mode.residue)
            lines.append(format_mode_line(k, mode.extrema_count, mode.value_range,
                                          mode.iterations, mode.final_delta, mode.delta_time))
            chart[f"imf {k}"] = mode.imf
        _write_series(os.path.join(args.output_dir, "final_residue.csv"),
                      result.final_residue)
        chart["residue"] = result.final_residue

        manifest = RunManifest(input=source, subcommand="decompose",
                               config={"max_modes": args.max_modes,
                                       "max_iterations": cfg.max_iterations,
                                       "delta_tolerance": cfg.delta_tolerance,
                                       "extension": cfg.extension,
                                       "initialization": cfg.initialization},
                               lines=tuple(lines))
        for line in manifest.lines:
            print(line)
        if args.plot:
            try:
                render_svg(chart, os.path.join(args.output_dir, "decomposition.svg"),
                           title=f"decomposition of {source}")
            except OSError as exc:
                raise CliError(2, str(exc)) from exc
    except CliError as exc:
        print(f"fastimd: error: {exc}", file=sys.stderr)
        return exc.code
    return 0


def run_filter(args: argparse.Namespace) -> int:
    try:
        data, source = _load_input(args)
        cfg = _refinement_config(args, "derivative")
        try:
            criteria = FilterCriteria(
                jump_time_blocks=tuple(args.block_jump),
                amplitude_floor=args.amp_floor,
                max_passes=args.max_passes,
            )
        except ValueError as exc:
            raise CliError(1, str(exc)) from exc
        _prepare_output_dir(args.output_dir)
        result = filter_series(data, criteria, cfg)

        _write_series(os.path.join(args.output_dir, "filtered.csv"), result.filtered)
        _write_series(os.path.join(args.output_dir, "blocked.csv"), result.blocked)

        lines = []
        for p, step in enumerate(result.diagnostics, start=1):
            lines.append(f"Pass {p}: marked {step.marked} extrema, "
                         f"max change {step.max_change:.6f}")
        if not lines:
            lines.append("Pass 0: nothing marked, input passed unchanged")
        manifest = RunManifest(input=source, subcommand="filter",
                               config={"jump_time_blocks": list(criteria.jump_time_blocks),
                                       "amplitude_floor": criteria.amplitude_floor,
                                       "max_passes": criteria.max_passes,
                                       "max_iterations": cfg.max_iterations,
                                       "extension": cfg.extension},
                               lines=tuple(lines))
        for line in manifest.lines:
            print(line)
        if args.plot:
            try:
                render_svg({"input": data, "filtered": result.filtered,
                            "blocked": result.blocked},
                           os.path.join(args.output_dir, "filter.svg"),
                           title=f"filter of {source}")
            except OSError as exc:
                raise CliError(2, str(exc)) from exc
    except CliError as exc:
        print(f"fastimd: error: {exc}", file=sys.stderr)
        return exc.code
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "decompose":
        return run_decompose(args)
    return run_filter(args)


if __name__ == "__main__":
    raise SystemExit(main())
