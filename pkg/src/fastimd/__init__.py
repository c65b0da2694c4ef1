"""Fast intrinsic mode decomposition for one-dimensional time series.

Splits a series into oscillatory mode functions plus a slow residue by
iterative spline refinement, and filters modes by extremum jump time or
amplitude.
"""

from .extension import EXTENSION_KINDS, EXTENSION_VARIANTS, extend
from .filtering import (
    FilterCriteria,
    FilterPass,
    FilterResult,
    MarkedList,
    build_passed_function,
    edge_jump_times,
    filter_series,
    mark_extrema,
)
from .imd import (
    DecompositionResult,
    ModeComponent,
    RefinementConfig,
    decompose,
    extract_mode,
    initial_residue,
    median_points,
    refine_once,
    turning_directions,
)
from .series import (
    Extremum,
    ImfReport,
    TimeSeries,
    count_zero_crossings,
    differentiate,
    find_extrema,
    imf_report,
    inflection_control_points,
)
from .signals import random_walk, riding_wave, sinusoid, synth, two_cosine
from .spline import CubicSpline, build_spline
from .csvio import read_csv, write_csv
from .svgplot import render_svg

__version__ = "0.1.0"

__all__ = [
    "CubicSpline",
    "DecompositionResult",
    "EXTENSION_KINDS",
    "EXTENSION_VARIANTS",
    "Extremum",
    "FilterCriteria",
    "FilterPass",
    "FilterResult",
    "ImfReport",
    "MarkedList",
    "ModeComponent",
    "RefinementConfig",
    "TimeSeries",
    "build_passed_function",
    "build_spline",
    "count_zero_crossings",
    "decompose",
    "differentiate",
    "edge_jump_times",
    "extend",
    "extract_mode",
    "filter_series",
    "find_extrema",
    "imf_report",
    "inflection_control_points",
    "initial_residue",
    "mark_extrema",
    "median_points",
    "random_walk",
    "read_csv",
    "refine_once",
    "render_svg",
    "riding_wave",
    "sinusoid",
    "synth",
    "turning_directions",
    "two_cosine",
    "write_csv",
]
