"""Low-pass a signal by blocking short oscillation cycles.

Instead of a frequency-domain cutoff, the filter looks at each extremum of
the fastest component and measures how long its rising and falling edges
last. Blocking every cycle with an edge shorter than 20 time units strips
the 30-period cosine and keeps the 300-period one.

    python3 demos/02_jump_time_filter.py
"""

import os

import numpy as np

from fastimd import FilterCriteria, filter_series, render_svg, two_cosine


def main() -> None:
    signal = two_cosine()
    criteria = FilterCriteria(jump_time_blocks=((0.0, 20.0),))
    result = filter_series(signal, criteria)

    for p, step in enumerate(result.diagnostics, start=1):
        print(f"pass {p}: {step.marked} extrema marked, max change {step.max_change:.3f}")

    slow = 70.0 * np.cos(np.pi * signal.times / 150.0)
    fast = 30.0 * np.cos(np.pi * signal.times / 15.0)
    n = len(signal)
    interior = slice(n // 10, n - n // 10)
    kept = np.sqrt(np.mean((result.filtered.values[interior] - slow[interior]) ** 2))
    removed = np.sqrt(np.mean((result.blocked.values[interior] - fast[interior]) ** 2))
    print(f"kept part vs slow cosine: rmse {kept:.3f}")
    print(f"removed part vs fast cosine: rmse {removed:.3f}")

    split = np.max(np.abs(result.filtered.values + result.blocked.values - signal.values))
    print(f"kept + removed vs input: max error {split:.2e}")

    out = os.path.join(os.path.dirname(__file__), "jump_time_filter.svg")
    render_svg(
        {"input": signal, "kept": result.filtered, "removed": result.blocked},
        out,
        title="jump-time filter, blocking [0, 20)",
    )
    print(f"chart written to {out}")


if __name__ == "__main__":
    main()
