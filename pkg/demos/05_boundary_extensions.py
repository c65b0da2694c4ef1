"""Compare boundary extensions on a short noisy segment.

Control points stop at the last extremum before each boundary, so the
residue spline needs synthetic points beyond the edges. Mirroring (even)
and point reflection (odd) give different edge behaviour; this script
extracts the fastest component of the same segment under each and charts
the residues. (The third kind, periodic wrap, needs a segment whose ends
match and is skipped here.)

    python3 demos/05_boundary_extensions.py
"""

import os

import numpy as np

from fastimd import RefinementConfig, TimeSeries, extract_mode, render_svg


def main() -> None:
    t = np.arange(0.0, 120.0, 0.5)
    rng = np.random.default_rng(7)
    values = (
        40.0 * np.cos(2.0 * np.pi * t / 80.0)
        + 8.0 * np.sin(2.0 * np.pi * t / 11.0)
        + rng.normal(scale=0.5, size=len(t))
    )
    signal = TimeSeries(t, values)

    chart = {"input": signal}
    for kind in ("even", "odd"):
        cfg = RefinementConfig(extension=kind)
        mode = extract_mode(signal, cfg)
        edge = np.max(np.abs(mode.residue.values[:20] - signal.values[:20]))
        print(
            f"{kind:>5}: {mode.iterations} passes, "
            f"residue-vs-data gap over the first 10 time units: {edge:.2f}"
        )
        chart[f"residue ({kind})"] = mode.residue

    out = os.path.join(os.path.dirname(__file__), "boundary_extensions.svg")
    render_svg(chart, out, title="boundary extension comparison")
    print(f"chart written to {out}")


if __name__ == "__main__":
    main()
