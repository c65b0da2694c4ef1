"""Tests for the TimeSeries container and the scan utilities built on it.

Covers construction invariants, finite differencing, extremum and plateau
detection, zero-crossing counts, inflection control points, and the
oscillation report.  Expected values for the synthetic signals were frozen
from analytic calculations: derivative sign changes for extremum counts,
cosine roots for crossing counts, second-derivative roots for inflection
times.
"""

import numpy as np
import numpy.testing as npt
import pytest

from fastimd import (
    TimeSeries,
    count_zero_crossings,
    differentiate,
    find_extrema,
    imf_report,
    inflection_control_points,
    two_cosine,
)


# ---------------------------------------------------------------------------
# construction invariants
# ---------------------------------------------------------------------------

def test_series_rejects_length_mismatch():
    with pytest.raises(ValueError):
        TimeSeries(np.arange(4.0), np.zeros(3))


def test_series_rejects_short_input():
    with pytest.raises(ValueError):
        TimeSeries(np.array([0.0]), np.array([1.0]))


def test_series_rejects_unsorted_times():
    with pytest.raises(ValueError):
        TimeSeries(np.array([0.0, 2.0, 1.0]), np.zeros(3))
    # duplicates are just as bad as reversals
    with pytest.raises(ValueError):
        TimeSeries(np.array([0.0, 1.0, 1.0]), np.zeros(3))


def test_series_rejects_non_finite():
    with pytest.raises(ValueError):
        TimeSeries(np.arange(3.0), np.array([0.0, np.nan, 1.0]))
    with pytest.raises(ValueError):
        TimeSeries(np.array([0.0, np.inf, 2.0]), np.zeros(3))


def test_series_basics():
    s = TimeSeries(np.arange(5.0), np.array([1.0, 3.0, 2.0, 5.0, 4.0]))
    assert len(s) == 5
    assert s.spread == 4.0
    r = s.with_values(np.zeros(5))
    npt.assert_array_equal(r.times, s.times)
    assert r.spread == 0.0


def test_series_copies_are_independent():
    t = np.arange(3.0)
    v = np.array([1.0, 2.0, 3.0])
    s = TimeSeries(t, v)
    v[0] = 99.0
    assert s.values[0] == 1.0


# ---------------------------------------------------------------------------
# differentiate
# ---------------------------------------------------------------------------

def test_differentiate_constant_is_zero():
    s = TimeSeries(np.arange(6.0), np.full(6, 5.0))
    npt.assert_allclose(differentiate(s).values, 0.0, atol=1e-15)


def test_differentiate_linear_is_slope():
    t = np.arange(10.0)
    s = TimeSeries(t, 2.0 * t)
    npt.assert_allclose(differentiate(s).values, 2.0, atol=1e-12)


def test_differentiate_sine_matches_cosine():
    t = np.arange(0.0, 2.0 * np.pi, 0.01)
    d = differentiate(TimeSeries(t, np.sin(t)))
    # interior points only: the one-sided ends are first order
    npt.assert_allclose(d.values[1:-1], np.cos(t[1:-1]), atol=1e-4)


def test_differentiate_is_linear_operator():
    rng = np.random.default_rng(7)
    t = np.sort(rng.uniform(0.0, 10.0, 40))
    t += np.arange(40) * 1e-6  # guard against duplicate draws
    for _ in range(20):
        a = rng.normal(size=40)
        b = rng.normal(size=40)
        c = rng.normal()
        lhs = differentiate(TimeSeries(t, a + c * b)).values
        rhs = differentiate(TimeSeries(t, a)).values + c * differentiate(TimeSeries(t, b)).values
        npt.assert_allclose(lhs, rhs, atol=1e-9)


# ---------------------------------------------------------------------------
# extrema
# ---------------------------------------------------------------------------

def test_single_peak():
    s = TimeSeries(np.arange(3.0), np.array([0.0, 1.0, 0.0]))
    ext = find_extrema(s)
    assert len(ext) == 1
    assert ext[0].kind == "max"
    assert ext[0].index == 1
    assert ext[0].time == 1.0
    assert ext[0].value == 1.0


def test_monotone_has_no_extrema():
    s = TimeSeries(np.arange(4.0), np.array([0.0, 1.0, 2.0, 3.0]))
    assert find_extrema(s) == []


def test_endpoints_are_not_extrema():
    s = TimeSeries(np.arange(4.0), np.array([5.0, 1.0, 2.0, 0.0]))
    ext = find_extrema(s)
    assert [e.index for e in ext] == [1, 2]
    assert [e.kind for e in ext] == ["min", "max"]


def test_plateau_reports_midpoint():
    s = TimeSeries(np.arange(4.0), np.array([0.0, 1.0, 1.0, 0.0]))
    ext = find_extrema(s)
    assert len(ext) == 1
    assert ext[0].kind == "max"
    assert ext[0].index == 1  # floor of the run midpoint

    s = TimeSeries(np.arange(5.0), np.array([0.0, 2.0, 2.0, 2.0, 0.0]))
    ext = find_extrema(s)
    assert len(ext) == 1
    assert ext[0].index == 2


def test_plateau_at_boundary_is_ignored():
    s = TimeSeries(np.arange(4.0), np.array([1.0, 1.0, 0.0, -1.0]))
    assert find_extrema(s) == []


def test_two_cosine_extremum_count():
    # frozen against a dense sign-change scan of the analytic derivative
    assert len(find_extrema(two_cosine())) == 59


def test_extrema_alternate():
    """Consecutive extrema always alternate min/max, any input."""
    rng = np.random.default_rng(42)
    for _ in range(50):
        n = rng.integers(10, 200)
        v = np.cumsum(rng.normal(size=n))
        ext = find_extrema(TimeSeries(np.arange(float(n)), v))
        kinds = [e.kind for e in ext]
        for a, b in zip(kinds, kinds[1:]):
            assert a != b
        # and every reported value matches the sample it points at
        for e in ext:
            assert v[e.index] == e.value


# ---------------------------------------------------------------------------
# zero crossings
# ---------------------------------------------------------------------------

def test_crossing_simple():
    s = TimeSeries(np.arange(3.0), np.array([1.0, -1.0, 1.0]))
    assert count_zero_crossings(s) == 2


def test_no_crossings_when_one_signed():
    s = TimeSeries(np.arange(4.0), np.array([1.0, 2.0, 0.5, 3.0]))
    assert count_zero_crossings(s) == 0


def test_crossing_through_exact_zero():
    s = TimeSeries(np.arange(3.0), np.array([1.0, 0.0, -1.0]))
    assert count_zero_crossings(s) == 1
    s = TimeSeries(np.arange(3.0), np.array([1.0, 0.0, 1.0]))
    assert count_zero_crossings(s) == 0
    s = TimeSeries(np.arange(4.0), np.array([1.0, 0.0, 0.0, -1.0]))
    assert count_zero_crossings(s) == 1


def test_cosine_crossing_count():
    # 30 cos(pi t / 15) on [0, 300]: analytic roots at 7.5 + 15 k, twenty of them
    t = np.arange(301.0)
    s = TimeSeries(t, 30.0 * np.cos(np.pi * t / 15.0))
    assert count_zero_crossings(s) == 20


# ---------------------------------------------------------------------------
# inflection control points
# ---------------------------------------------------------------------------

def test_inflection_on_line_is_empty():
    t = np.arange(10.0)
    ct, cv = inflection_control_points(TimeSeries(t, 3.0 * t + 1.0))
    assert len(ct) == 0
    assert len(cv) == 0


def test_inflection_on_sine():
    t = np.arange(0.0, 4.0 * np.pi, 0.01)
    ct, cv = inflection_control_points(TimeSeries(t, np.sin(t)))
    # inflections of sin are its roots; values there are near zero
    assert len(ct) == 3
    for x in ct:
        assert min(abs(x - np.pi), abs(x - 2.0 * np.pi), abs(x - 3.0 * np.pi)) < 0.05
    npt.assert_allclose(cv, 0.0, atol=0.05)


def test_inflection_matches_analytic_second_derivative():
    """Control times of the two-cosine signal land within one sample step of
    the roots of its analytic second derivative."""
    s = two_cosine()
    ct, cv = inflection_control_points(s)
    tt = np.linspace(0.0, 900.0, 900001)
    fpp = (
        -70.0 * (np.pi / 150.0) ** 2 * np.cos(np.pi * tt / 150.0)
        - 30.0 * (np.pi / 15.0) ** 2 * np.cos(np.pi * tt / 15.0)
    )
    roots = tt[:-1][np.sign(fpp[:-1]) * np.sign(fpp[1:]) < 0]
    assert len(ct) == len(roots) == 60
    step = s.times[1] - s.times[0]
    for x in ct:
        assert np.min(np.abs(roots - x)) <= step


# ---------------------------------------------------------------------------
# oscillation report
# ---------------------------------------------------------------------------

def test_report_on_pure_cosine():
    t = np.arange(301.0)
    rep = imf_report(TimeSeries(t, 30.0 * np.cos(np.pi * t / 15.0)))
    assert rep.condition1_ok
    assert abs(rep.zero_crossings - rep.extrema_count) <= 1


def test_report_on_ramp():
    t = np.arange(10.0)
    rep = imf_report(TimeSeries(t, t - 4.5))
    assert rep.extrema_count == 0
    assert rep.zero_crossings <= 1
    assert rep.condition1_ok


def test_report_flags_one_signed_wobble():
    # two maxima, no minimum between crossings: clearly not a mode
    t = np.arange(7.0)
    v = np.array([1.0, 3.0, 2.0, 4.0, 2.0, 3.0, 1.0])
    rep = imf_report(TimeSeries(t, v))
    assert not rep.condition1_ok
