"""Recover a ripple that never shows up as extrema of the raw data.

The composite 70 cos(2 pi t / 300) + 2 sin(2 pi t / 30) hides its ripple on
the carrier's steep edges: the carrier's slope there exceeds the ripple's,
so the sum is monotone and extremum detection sees nothing. Starting the
refinement from the curvature turning points instead exposes the ripple,
because curvature is dominated by the fast term everywhere.

    python3 demos/03_ripple_on_steep_edges.py
"""

import os

from fastimd import RefinementConfig, extract_mode, find_extrema, render_svg, riding_wave


def main() -> None:
    signal = riding_wave()

    edge = (60.0, 90.0)  # the carrier falls steepest around t = 75
    on_edge = [e for e in find_extrema(signal) if edge[0] < e.time < edge[1]]
    print(f"raw data extrema in t = {edge}: {len(on_edge)}")

    from_curvature = extract_mode(signal, RefinementConfig(initialization="derivative"))
    from_data = extract_mode(signal, RefinementConfig(initialization="data_function"))
    print(f"component extrema, curvature start: {from_curvature.extrema_count}")
    print(f"component extrema, zero start:      {from_data.extrema_count}")

    ripple_on_edge = [
        e for e in find_extrema(from_curvature.imf) if edge[0] < e.time < edge[1]
    ]
    for e in ripple_on_edge:
        print(f"  recovered ripple extremum at t = {e.time:.1f}, value {e.value:+.3f}")

    out = os.path.join(os.path.dirname(__file__), "ripple_on_steep_edges.svg")
    render_svg(
        {
            "input": signal,
            "ripple (curvature start)": from_curvature.imf,
            "ripple (zero start)": from_data.imf,
        },
        out,
        title="ripple recovery on steep edges",
    )
    print(f"chart written to {out}")


if __name__ == "__main__":
    main()
