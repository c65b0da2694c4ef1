"""Peel a random walk into oscillation scales and a trend.

A cumulative-sum walk has no designed frequencies, so the decomposition has
to find its own scale separation: each component oscillates slower than the
one before, and the final residue is the walk's long-run drift.

    python3 demos/04_random_walk_trend.py
"""

import os

import numpy as np

from fastimd import decompose, imf_report, random_walk, render_svg


def main() -> None:
    signal = random_walk(seed=0)
    result = decompose(signal)

    print(f"{len(signal)} samples -> {len(result.modes)} components + trend")
    for k, mode in enumerate(result.modes, start=1):
        rep = imf_report(mode.imf)
        print(
            f"  component {k}: {rep.extrema_count} extrema, "
            f"{rep.zero_crossings} crossings, balance ok: {rep.condition1_ok}"
        )

    total = result.final_residue.values.copy()
    for mode in result.modes:
        total += mode.imf.values
    print(f"reconstruction error: {np.max(np.abs(total - signal.values)):.2e}")

    out = os.path.join(os.path.dirname(__file__), "random_walk_trend.svg")
    chart = {"walk": signal, "trend": result.final_residue}
    if len(result.modes) >= 2:
        chart["slowest component"] = result.modes[-1].imf
    render_svg(chart, out, title="random walk, trend extraction")
    print(f"chart written to {out}")


if __name__ == "__main__":
    main()
