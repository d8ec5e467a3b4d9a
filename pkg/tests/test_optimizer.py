from dataclasses import replace

import numpy as np
import numpy.testing as npt
import pytest

from gsslink.airmetrics import AirReport
from gsslink.constellation import GssParameters, build_gss, gss_bounds
from gsslink.errors import ConfigError
from gsslink.fiberlink import FiberConfig, ImpairmentConfig, run_link
from gsslink.optimizer import (
    SearchOptions,
    make_gss_objective,
    metric_value,
    midpoint_init,
    objective_for,
    optimize_gss,
    optimize_ps,
    pattern_search,
    poll_points,
)


def quadratic(x):
    return -float(np.sum((x - 0.3) ** 2))


class TestSearchOptions(object):
    @pytest.mark.parametrize(
        'field, value',
        [
            ('contraction', 1.0),
            ('expansion', 1.0),
            ('mesh_tolerance', 0.0),
            ('initial_mesh', 1.5),
            ('max_evaluations', 0),
            ('objective', 'gmi'),
            ('workers', 0),
        ],
    )
    def test_invalid(self, field, value):
        with pytest.raises(ConfigError) as info:
            SearchOptions(**{field: value})
        assert info.value.field == field


class TestPolling(object):
    def test_full_coordinate_set(self):
        polls = poll_points(np.array([0.5, 0.5]), 0.25, np.zeros(2), np.ones(2))
        expected = [[0.75, 0.5], [0.25, 0.5], [0.5, 0.75], [0.5, 0.25]]
        npt.assert_allclose(polls, expected)

    def test_scaled_and_projected(self):
        polls = poll_points(np.array([0.0, 5.0]), 0.5, np.zeros(2), np.array([1.0, 10.0]))
        # -e_0 does not move away from the lower bound and is dropped
        npt.assert_allclose(polls, [[0.5, 5.0], [0.0, 10.0], [0.0, 0.0]])


class TestPatternSearch(object):
    def test_quadratic(self):
        opts = SearchOptions(max_evaluations=5000)
        x, trace = pattern_search(quadratic, np.zeros(3), np.ones(3), np.full(3, 0.9), opts)
        npt.assert_allclose(x, 0.3, atol=1e-3)
        assert trace.best.f == quadratic(x)
        assert trace.best.mesh < opts.mesh_tolerance

    def test_constant_returns_init(self):
        init = np.array([0.2, 0.7])
        x, trace = pattern_search(lambda v: 1.0, np.zeros(2), np.ones(2), init)
        npt.assert_array_equal(x, init)
        assert not any(e.accepted for e in trace.entries[1:])

    def test_monotone_trace(self):
        opts = SearchOptions(max_evaluations=400)
        _, trace = pattern_search(quadratic, np.zeros(4), np.ones(4), np.full(4, 0.05), opts)
        values = [e.f for e in trace.entries]
        assert np.all(np.diff(values) >= 0)
        assert np.all(np.diff(trace.accepted_values()) > 0)
        assert [e.iteration for e in trace.entries] == list(range(len(trace)))

    def test_budget(self):
        opts = SearchOptions(max_evaluations=25)
        _, trace = pattern_search(quadratic, np.zeros(3), np.ones(3), np.full(3, 0.9), opts)
        assert trace.evaluations <= 25

    def test_nan_is_rejected(self):
        init = np.array([0.5])

        def objective(v):
            return 0.0 if v[0] == 0.5 else np.nan

        x, trace = pattern_search(objective, np.zeros(1), np.ones(1), init)
        npt.assert_array_equal(x, init)
        assert trace.best.f == 0.0

    def test_workers_do_not_change_result(self):
        base = SearchOptions(max_evaluations=200)
        args = (quadratic, np.zeros(3), np.ones(3), np.full(3, 0.9))
        x1, serial = pattern_search(*args, base)
        x4, threaded = pattern_search(*args, replace(base, workers=4))
        npt.assert_array_equal(x1, x4)
        assert [e.f for e in serial.entries] == [e.f for e in threaded.entries]

    def test_init_outside_box(self):
        with pytest.raises(ValueError):
            pattern_search(quadratic, np.zeros(2), np.ones(2), np.array([0.5, 1.5]))

    def test_trace_table(self):
        opts = SearchOptions(max_evaluations=20)
        _, trace = pattern_search(quadratic, np.zeros(2), np.ones(2), np.full(2, 0.9), opts)
        assert trace.columns() == ['iteration', 'objective', 'mesh', 'accepted', 'p0', 'p1']
        assert all(len(row) == 6 for row in trace.rows())


class TestGssObjective(object):
    @pytest.mark.parametrize('m, t', [(8, 4), (8, 1), (8, 8), (6, 2)])
    def test_midpoint_is_valid(self, m, t):
        params = midpoint_init(m, t)
        lower, upper = gss_bounds(m, t)
        vector = params.to_vector()
        assert np.all(vector >= lower) and np.all(vector <= upper)
        assert build_gss(params).size == 1 << m

    def test_metric_value(self):
        report = AirReport(mi=7.5, rbmd=7.2, bitwise_mi=np.ones(8), sigma2=0.1)
        assert metric_value(report, 'mi') == 7.5
        assert metric_value(report, 'rbmd') == 7.2
        with pytest.raises(ValueError):
            metric_value(report, 'gmi')

    def test_collision_is_minus_infinity(self, linear_fiber, quiet_impairments):
        params = GssParameters(8, 1, np.array([0.5]), np.full((8, 3), np.pi / 4))
        assert objective_for(params, linear_fiber, quiet_impairments, 256, 0) == -np.inf

    def test_bad_vector_is_minus_infinity(self, linear_fiber, quiet_impairments):
        objective = make_gss_objective(8, 4, linear_fiber, quiet_impairments, 256, 0)
        assert objective(np.zeros(5)) == -np.inf

    def test_common_random_numbers(self, linear_fiber):
        imp = ImpairmentConfig(launch_power_dbm=-10.0)
        objective = make_gss_objective(8, 4, linear_fiber, imp, 2**11, 0)
        vector = midpoint_init(8, 4).to_vector()
        assert objective(vector) == objective(vector.copy())


@pytest.mark.slow
class TestOptimization(object):
    def test_optimize_gss(self):
        fiber = FiberConfig(gamma=0.0, span_length=60.0, steps_per_span=1)
        imp = ImpairmentConfig(launch_power_dbm=-4.0)
        opts = SearchOptions(max_evaluations=30, seed=1)
        params, report, trace = optimize_gss(
            6, 2, fiber, imp, opts, search_symbols=2**10, final_symbols=2**11
        )
        assert isinstance(params, GssParameters)
        assert trace.evaluations <= 30
        # the staggered midpoint crowds every shell, so the search must find a strict gain
        assert trace.best.f > trace.entries[0].f
        assert 0 < report.rbmd <= 6.0 + 1e-9
        _, start = run_link(build_gss(midpoint_init(6, 2)), fiber, imp, 2**11, opts.seed)
        assert report.rbmd > start.rbmd

    def test_optimize_ps(self):
        fiber = FiberConfig(gamma=0.0, span_length=60.0, steps_per_span=1)
        imp = ImpairmentConfig(launch_power_dbm=-6.0)
        opts = SearchOptions(max_evaluations=12, initial_mesh=0.25)
        p_low, report, trace = optimize_ps(fiber, imp, opts, 2**10, 2**11)
        assert 0 < p_low < 1
        assert trace.entries[0].x[0] == 0.5
        assert np.isfinite(report.mi)

    def test_optimize_ps_uniform_at_high_snr(self):
        # 38 dB SNR: the rate is the entropy, which peaks at the uniform pmf
        fiber = FiberConfig(gamma=0.0, span_length=10.0, steps_per_span=1)
        imp = ImpairmentConfig(tx_osnr_db=None, rx_noise_power_dbm=-40.0, launch_power_dbm=0.0)
        opts = SearchOptions(max_evaluations=20, initial_mesh=0.25)
        p_low, report, _ = optimize_ps(fiber, imp, opts, 2**12, 2**12)
        assert abs(p_low - 0.5) < 0.05
        npt.assert_allclose(report.rbmd, 8.0, atol=0.05)
