"""Iterative intrinsic-mode extraction.

One extraction level refines a residue estimate in place of the classical
sifting loop: control points are taken on the data at the current
component's extremum times, replaced by median points wherever the control
polyline flips turning direction, and interpolated with a natural cubic
spline. The component is always the pointwise difference between the data
and the residue, so every level reconstructs its input exactly.

The full decomposition peels components off the running residue until the
derivative of what remains has fewer than three extrema.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .extension import EXTENSION_KINDS, EXTENSION_VARIANTS, extend
from .series import TimeSeries, differentiate, find_extrema, inflection_control_points
from .spline import CubicSpline, build_spline

__all__ = [
    "RefinementConfig",
    "ModeComponent",
    "DecompositionResult",
    "turning_directions",
    "median_points",
    "initial_residue",
    "refine_once",
    "extract_mode",
    "decompose",
]

INITIALIZATIONS = ("derivative", "data_function")

_NOISE_FLOOR = 1e-12


@dataclass(frozen=True)
class RefinementConfig:
    """Knobs for one extraction level.

    ``delta_tolerance`` of None resolves to 1e-3 times the value spread of
    the level's input. ``initialization`` picks how the first residue guess
    is built: from the curvature turning points of the data ("derivative",
    reveals ripples riding on steep edges) or as a zero series
    ("data_function").
    """

    max_iterations: int = 12
    delta_tolerance: Optional[float] = None
    stop_on_nondecreasing_delta: bool = True
    extension: str = "even"
    extension_variant: str = "strict"
    initialization: str = "derivative"

    def __post_init__(self) -> None:
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")
        if self.delta_tolerance is not None and self.delta_tolerance < 0.0:
            raise ValueError("delta_tolerance must be nonnegative")
        if self.extension not in EXTENSION_KINDS:
            raise ValueError(f"unknown extension kind {self.extension!r}")
        if self.extension_variant not in EXTENSION_VARIANTS:
            raise ValueError(f"unknown extension variant {self.extension_variant!r}")
        if self.initialization not in INITIALIZATIONS:
            raise ValueError(f"unknown initialization {self.initialization!r}")

    def resolve_delta_tolerance(self, data: TimeSeries) -> float:
        if self.delta_tolerance is not None:
            return self.delta_tolerance
        return 1e-3 * data.spread


@dataclass(frozen=True)
class ModeComponent:
    """One extraction level: the component, its residue, and convergence
    diagnostics.

    ``imf.values + residue.values`` equals the level's input pointwise.
    ``delta_history`` records the max residue change of every refinement
    pass that ran, including any discarded final pass.
    """

    imf: TimeSeries
    residue: TimeSeries
    iterations: int
    final_delta: float
    delta_time: float
    extrema_count: int
    value_range: tuple[float, float]
    delta_history: tuple[float, ...] = ()


@dataclass(frozen=True)
class DecompositionResult:
    """All extracted components, fastest first, plus the final residue."""

    modes: tuple[ModeComponent, ...]
    final_residue: TimeSeries


def turning_directions(t: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Cross products of consecutive control-polyline segment vectors.

    For each interior point the z-component of (P_i - P_{i-1}) x
    (P_{i+1} - P_i): positive on a left turn, negative on a right turn, zero
    when the three points are collinear. Output is two shorter than the
    input.
    """
    t = np.asarray(t, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if len(t) < 3:
        raise ValueError("turning directions need at least 3 points")
    dt = np.diff(t)
    dv = np.diff(v)
    return dt[:-1] * dv[1:] - dv[:-1] * dt[1:]


def median_points(t: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Residue control points for an extended control sequence.

    A point whose turning direction disagrees in sign with either neighbour's
    is replaced by the average of itself and the chord through its two
    neighbours; a point inside a consistently-turning stretch is kept as is.
    Only points with a full three-direction window produce output, so the
    result drops the two outermost points on each side. Callers extend the
    sequence first to get medians at the true boundary points.
    """
    t = np.asarray(t, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if len(t) < 5:
        raise ValueError("median points need at least 5 points")
    alpha = turning_directions(t, v)
    prev_prod = alpha[:-2] * alpha[1:-1]
    next_prod = alpha[1:-1] * alpha[2:]
    use_median = (prev_prod < 0.0) | (next_prod < 0.0)
    ti = t[2:-2]
    vi = v[2:-2]
    chord = v[1:-3] + (v[3:-1] - v[1:-3]) * (ti - t[1:-3]) / (t[3:-1] - t[1:-3])
    return ti.copy(), np.where(use_median, 0.5 * (vi + chord), vi)


def initial_residue(data: TimeSeries, initialization: str = "derivative") -> Optional[TimeSeries]:
    """Starting residue estimate for one extraction level.

    "derivative": the piecewise-linear interpolant through the curvature
    turning points of the data, held constant from the outermost turning
    point to the series edge; None when no turning point exists.
    "data_function": a zero series, so refinement starts from the data
    itself.
    """
    if initialization == "data_function":
        return data.with_values(np.zeros(len(data)))
    if initialization != "derivative":
        raise ValueError(f"unknown initialization {initialization!r}")
    ct, cv = inflection_control_points(data)
    if len(ct) == 0:
        return None
    return data.with_values(np.interp(data.times, ct, cv))


def refine_once(
    data: TimeSeries,
    current_imf: TimeSeries,
    cfg: RefinementConfig = RefinementConfig(),
) -> Optional[tuple[TimeSeries, TimeSeries, int]]:
    """One residue improvement pass.

    Control points sit on the data at the current component's extremum
    times. After boundary extension and median replacement, the natural
    cubic spline through the medians sampled on the data grid becomes the
    improved residue, and data - residue the improved component. Returns
    ``(residue, imf, control_count)``, or None when the component has fewer
    than 3 extrema and no refinement is possible.
    """
    ext = find_extrema(current_imf)
    if len(ext) < 3:
        return None
    idx = np.array([e.index for e in ext], dtype=np.intp)
    anchors = _boundary_anchors(data)
    ct = data.times[idx]
    cv = data.values[idx]
    if cfg.extension in ("even", "cyclic"):
        # the series endpoints count as the outermost control points; the
        # extension then pivots on the data boundary itself
        ct = np.concatenate(([data.times[0]], ct, [data.times[-1]]))
        cv = np.concatenate(([data.values[0]], cv, [data.values[-1]]))
    et, ev = extend(
        ct,
        cv,
        cfg.extension,
        start_anchor=anchors[0],
        end_anchor=anchors[1],
        variant=cfg.extension_variant,
    )
    mt, mv = median_points(et, ev)
    # extend the medians the same way so the residue spline reaches the data
    # boundary; any sample still outside the span holds the end knot value
    st, sv = extend(
        mt,
        mv,
        cfg.extension,
        start_anchor=anchors[0],
        end_anchor=anchors[1],
        variant=cfg.extension_variant,
    )
    spline = build_spline(st, sv)
    residue_vals = _evaluate_held(spline, data.times)
    residue = data.with_values(residue_vals)
    imf = data.with_values(data.values - residue_vals)
    return residue, imf, len(ext)


def extract_mode(
    data: TimeSeries,
    cfg: RefinementConfig = RefinementConfig(),
) -> Optional[ModeComponent]:
    """Separate one oscillatory component from the data.

    Returns None when the first derivative of the data has fewer than three
    extrema, meaning nothing oscillatory remains. Otherwise refinement runs
    until the iteration cap, until the largest residue change between passes
    drops under the tolerance, or until that change stops shrinking, in
    which case the previous, better iterate is kept.
    """
    if len(find_extrema(differentiate(data))) < 3:
        return None
    residue = initial_residue(data, cfg.initialization)
    if residue is None:
        return None
    imf = data.with_values(data.values - residue.values)
    tol = cfg.resolve_delta_tolerance(data)

    kept_iter = 0
    kept_delta = 0.0
    kept_delta_time = float(data.times[0])
    history: list[float] = []

    for k in range(1, cfg.max_iterations + 1):
        step = refine_once(data, imf, cfg)
        if step is None:
            # component collapsed below 3 extrema; keep the last good iterate
            if k == 1:
                return None
            break
        new_residue, new_imf, _ = step
        change = np.abs(new_residue.values - residue.values)
        j = int(np.argmax(change))
        delta = float(change[j])
        history.append(delta)
        if cfg.stop_on_nondecreasing_delta and k > 1 and delta >= kept_delta:
            break
        residue, imf = new_residue, new_imf
        kept_iter = k
        kept_delta = delta
        kept_delta_time = float(data.times[j])
        if delta < tol:
            break

    # a component this far under the input is round-off, not structure;
    # emitting it would make termination depend on arithmetic bit patterns
    if imf.spread < _NOISE_FLOOR * data.spread:
        return None

    ext_count = len(find_extrema(imf))
    return ModeComponent(
        imf=imf,
        residue=residue,
        iterations=kept_iter,
        final_delta=kept_delta,
        delta_time=kept_delta_time,
        extrema_count=ext_count,
        value_range=(float(imf.values.min()), float(imf.values.max())),
        delta_history=tuple(history),
    )


def decompose(
    data: TimeSeries,
    cfg: RefinementConfig = RefinementConfig(),
    max_modes: int = 16,
) -> DecompositionResult:
    """Split the data into oscillatory components plus a trend residue.

    Components come out fastest first; extraction repeats on the running
    residue until no component remains or ``max_modes`` is reached. Summing
    every component with the final residue reproduces the input to
    round-off.
    """
    if max_modes < 1:
        raise ValueError("max_modes must be at least 1")
    reference = data.spread
    modes: list[ModeComponent] = []
    current = data
    while len(modes) < max_modes:
        # a residue flat to round-off relative to the input holds no further
        # structure; scanning it would extract arithmetic noise
        if reference > 0.0 and current.spread < _NOISE_FLOOR * reference:
            break
        mode = extract_mode(current, cfg)
        if mode is None:
            break
        modes.append(mode)
        current = mode.residue
    return DecompositionResult(tuple(modes), current)


def _boundary_anchors(data: TimeSeries):
    start = (float(data.times[0]), float(data.values[0]))
    end = (float(data.times[-1]), float(data.values[-1]))
    return start, end


def _evaluate_held(spline: CubicSpline, grid: np.ndarray) -> np.ndarray:
    """Spline values on the grid, holding end knot values outside the span."""
    lo, hi = spline.span
    return spline.evaluate_on_grid(np.clip(grid, lo, hi))
