from dataclasses import replace

import numpy as np
import numpy.testing as npt
import pytest

from gsslink.airmetrics import qam_awgn_air
from gsslink.constellation import build_ps_pm16qam
from gsslink.errors import AlignmentError, ConfigError
from gsslink.fiberlink import (
    DualPolWaveform,
    FiberConfig,
    ImpairmentConfig,
    add_rx_noise,
    add_tx_noise,
    align,
    cd_compensate,
    default_discard,
    fields_to_symbols,
    generate_symbols,
    ls_gain,
    matched_filter,
    min_launch_power,
    out_of_band_ratio,
    propagate,
    pulse_shape,
    receiver_dsp,
    rrc_spectrum,
    run_link,
    scale_to_power,
    ssfm_propagate,
    symbols_to_fields,
)
from gsslink.utils import dbm2w, random_stream


def _random_fields(length, seed=0):
    rng = random_stream(seed, 'test')
    return rng.standard_normal((2, length)) + 1j * rng.standard_normal((2, length))


class TestConfig(object):
    @pytest.mark.parametrize(
        'field, value',
        [
            ('alpha', -0.1),
            ('span_length', 0.0),
            ('steps_per_span', 0),
            ('oversampling', 1),
            ('rrc_rolloff', 1.5),
            ('symbol_rate', 0.0),
        ],
    )
    def test_invalid(self, field, value):
        with pytest.raises(ConfigError) as info:
            FiberConfig(**{field: value})
        assert info.value.field == field

    def test_derived(self):
        cfg = FiberConfig()
        npt.assert_allclose(cfg.alpha_neper, 0.2 * np.log(10) / 10)
        npt.assert_allclose(cfg.beta2_s2, -21.68e-24)
        npt.assert_allclose(cfg.sample_rate, 2 * 59.84e9)
        npt.assert_allclose(cfg.step_size, 0.16)

    def test_impairments_finite(self):
        with pytest.raises(ConfigError):
            ImpairmentConfig(launch_power_dbm=np.inf)

    @pytest.mark.parametrize('length, expected', [(0.0, -20.0), (80.0, -4.0), (160.0, 12.0)])
    def test_min_launch_power(self, length, expected):
        npt.assert_allclose(min_launch_power(length), expected)

    def test_min_launch_power_negative(self):
        with pytest.raises(ValueError):
            min_launch_power(-1.0)


class TestWaveform(object):
    def test_power_scaling(self):
        wave = DualPolWaveform.from_stacked(_random_fields(256), 1e9)
        scaled = scale_to_power(wave, 3.0)
        npt.assert_allclose(scaled.power_dbm(), 3.0)
        npt.assert_allclose(scaled.power(), dbm2w(3.0))

    def test_unequal_lengths(self):
        with pytest.raises(ValueError):
            DualPolWaveform(np.zeros(4), np.zeros(5), 1e9)

    def test_fields_roundtrip(self, pm16qam):
        _, symbols = generate_symbols(pm16qam, 64, seed=0)
        fields = symbols_to_fields(symbols)
        assert fields.shape == (2, 64)
        npt.assert_array_equal(fields_to_symbols(fields), symbols)


class TestSymbols(object):
    def test_reproducible(self, pm16qam):
        a, _ = generate_symbols(pm16qam, 128, seed=4)
        b, _ = generate_symbols(pm16qam, 128, seed=4)
        npt.assert_array_equal(a, b)

    def test_follows_pmf(self):
        c = build_ps_pm16qam(0.8)
        _, symbols = generate_symbols(c, 2**14, seed=1)
        inner = np.mean(np.abs(symbols) < np.max(np.abs(c.points)) - 1e-9)
        npt.assert_allclose(inner, 0.8, atol=0.02)

    def test_invalid_length(self, pm16qam):
        with pytest.raises(ValueError):
            generate_symbols(pm16qam, 0, seed=0)


class TestPulseShaping(object):
    @pytest.mark.parametrize('sps', [2, 4])
    @pytest.mark.parametrize('rolloff', [0.0, 0.05, 0.5])
    def test_nyquist(self, sps, rolloff):
        n = 64 * sps
        h2 = rrc_spectrum(n, sps, rolloff) ** 2
        folded = h2.reshape(sps, -1).sum(axis=0) / sps
        npt.assert_allclose(folded, 1.0, atol=1e-12)

    @pytest.mark.parametrize('oversampling', [2, 4])
    def test_matched_filter_identity(self, pm16qam, oversampling):
        cfg = FiberConfig(oversampling=oversampling)
        _, symbols = generate_symbols(pm16qam, 1024, seed=2)
        wave = pulse_shape(symbols, cfg)
        assert wave.length == 1024 * oversampling
        npt.assert_allclose(matched_filter(wave, cfg), symbols_to_fields(symbols), atol=1e-10)

    def test_band_limited(self, pm16qam):
        cfg = FiberConfig()
        _, symbols = generate_symbols(pm16qam, 1024, seed=2)
        assert out_of_band_ratio(pulse_shape(symbols, cfg), cfg) < -100


class TestSplitStep(object):
    def _wave(self, pm16qam, cfg, num_symbols=512):
        _, symbols = generate_symbols(pm16qam, num_symbols, seed=3)
        return pulse_shape(symbols, cfg)

    def test_loss(self, pm16qam):
        cfg = FiberConfig(gamma=0.0, span_length=80.0, steps_per_span=1)
        out = ssfm_propagate(self._wave(pm16qam, cfg), cfg, launch_power_dbm=0.0)
        npt.assert_allclose(out.power_dbm(), -16.0, atol=1e-9)

    def test_lossless_kerr_conserves_power(self, pm16qam):
        cfg = FiberConfig(alpha=0.0, span_length=50.0, steps_per_span=20)
        out = ssfm_propagate(self._wave(pm16qam, cfg), cfg, launch_power_dbm=10.0)
        npt.assert_allclose(out.power_dbm(), 10.0, atol=1e-9)

    def test_dispersion_inverts(self, pm16qam):
        cfg = FiberConfig(alpha=0.0, gamma=0.0, span_length=100.0, steps_per_span=1)
        wave = self._wave(pm16qam, cfg)
        out = cd_compensate(ssfm_propagate(wave, cfg, 0.0), cfg)
        npt.assert_allclose(out.stacked, scale_to_power(wave, 0.0).stacked, atol=1e-12)

    def test_step_count_independent_without_kerr(self, pm16qam):
        one = FiberConfig(gamma=0.0, span_length=40.0, steps_per_span=1)
        many = replace(one, steps_per_span=25)
        wave = self._wave(pm16qam, one)
        npt.assert_allclose(
            ssfm_propagate(wave, one, 2.0).stacked,
            ssfm_propagate(wave, many, 2.0).stacked,
            atol=1e-12,
        )

    def test_kerr_phase_rotation(self):
        # CW light without dispersion only picks up the nonlinear phase
        cfg = FiberConfig(alpha=0.0, beta2=0.0, span_length=10.0, steps_per_span=5)
        wave = DualPolWaveform(np.ones(64), np.zeros(64), cfg.sample_rate)
        out = ssfm_propagate(wave, cfg, launch_power_dbm=10.0)
        phase = 8 / 9 * cfg.gamma * dbm2w(10.0) * cfg.span_length
        npt.assert_allclose(np.angle(out.x_pol), phase, atol=1e-9)


class TestNoiseLoading(object):
    def test_disabled(self):
        wave = DualPolWaveform.from_stacked(_random_fields(64), 1e9)
        assert add_tx_noise(wave, None) is wave
        assert add_rx_noise(wave, None) is wave

    def test_tx_noise_power(self):
        cfg = FiberConfig()
        wave = DualPolWaveform.from_stacked(_random_fields(2**16), cfg.sample_rate)
        wave = scale_to_power(wave, 0.0)
        noisy = add_tx_noise(wave, 20.0, seed=1)
        noise = DualPolWaveform.from_stacked(noisy.stacked - wave.stacked, wave.sample_rate)
        expected = wave.power() * 0.01 * cfg.sample_rate / 12.5e9
        npt.assert_allclose(noise.power(), expected, rtol=0.03)

    def test_rx_noise_power(self):
        cfg = FiberConfig()
        wave = DualPolWaveform(np.zeros(2**16), np.zeros(2**16), cfg.sample_rate)
        noisy = add_rx_noise(wave, -30.0, seed=1, symbol_rate=cfg.symbol_rate)
        npt.assert_allclose(noisy.power(), dbm2w(-30.0) * 2, rtol=0.03)


class TestReceiver(object):
    def test_default_discard(self):
        assert default_discard(2**16) == 1024
        assert default_discard(1024) == 64

    def test_align_recovers_lag(self):
        reference = _random_fields(1024)
        aligned, lag = align(np.roll(reference, 37, axis=-1), reference)
        assert lag == 37
        npt.assert_allclose(aligned, reference)

    def test_align_rejects_unrelated(self):
        with pytest.raises(AlignmentError):
            align(_random_fields(4096, seed=1), _random_fields(4096, seed=2))

    def test_ls_gain(self):
        reference = _random_fields(128)
        gain = ls_gain(reference * np.array([[2j], [0.5]]), reference)
        npt.assert_allclose(gain, [2j, 0.5])

    def test_receiver_dsp_noiseless(self, pm16qam, linear_fiber):
        index, symbols = generate_symbols(pm16qam, 1024, seed=6)
        wave = ssfm_propagate(pulse_shape(symbols, linear_fiber), linear_fiber, -3.0)
        rec = receiver_dsp(wave, linear_fiber, symbols, index)
        assert rec.count == 1024 - 2 * 64
        npt.assert_array_equal(rec.tx_index, index[64:-64])
        npt.assert_allclose(rec.rx, symbols[64:-64], atol=1e-9)

    def test_receiver_dsp_discard(self, pm16qam, linear_fiber):
        index, symbols = generate_symbols(pm16qam, 128, seed=6)
        wave = pulse_shape(symbols, linear_fiber)
        with pytest.raises(ValueError):
            receiver_dsp(wave, linear_fiber, symbols, index, discard=64)


class TestLink(object):
    def test_guard_not_needed_without_kerr(self, pm16qam, linear_fiber, quiet_impairments):
        _, symbols = generate_symbols(pm16qam, 256, seed=0)
        _, used = propagate(symbols, linear_fiber, quiet_impairments, seed=0)
        assert used == linear_fiber

    def test_enforced_minimum_power(self, pm16qam):
        fiber = FiberConfig(gamma=0.0, span_length=160.0, steps_per_span=1)
        imp = ImpairmentConfig(launch_power_dbm=5.0, enforce_min_power=True)
        with pytest.raises(ConfigError) as info:
            run_link(pm16qam, fiber, imp, num_symbols=256, seed=0)
        assert info.value.field == 'launch_power_dbm'

    def test_reproducible(self, pm16qam, linear_fiber):
        imp = ImpairmentConfig(launch_power_dbm=-5.0)
        _, a = run_link(pm16qam, linear_fiber, imp, num_symbols=2**11, seed=8)
        _, b = run_link(pm16qam, linear_fiber, imp, num_symbols=2**11, seed=8)
        assert a.mi == b.mi
        assert a.rbmd == b.rbmd
        _, c = run_link(pm16qam, linear_fiber, imp, num_symbols=2**11, seed=9)
        assert c.mi != a.mi

    @pytest.mark.slow
    def test_receiver_noise_sets_snr(self, pm16qam, linear_fiber):
        # 10 km at 0.2 dB/km: P_rx = -2 dBm, so -15.5 dBm of noise gives 13.5 dB
        imp = ImpairmentConfig(tx_osnr_db=None, rx_noise_power_dbm=-15.5, launch_power_dbm=0.0)
        _, report = run_link(pm16qam, linear_fiber, imp, num_symbols=2**16, seed=1)
        npt.assert_allclose(-10 * np.log10(report.sigma2), 13.5, atol=0.05)
        mi_2d, _ = qam_awgn_air(16, 13.5)
        npt.assert_allclose(report.mi, 2 * mi_2d, atol=0.03)

    @pytest.mark.slow
    def test_nonlinear_penalty(self, pm16qam):
        fiber = FiberConfig(span_length=80.0, steps_per_span=200)
        low = ImpairmentConfig(launch_power_dbm=4.0)
        high = ImpairmentConfig(launch_power_dbm=18.0)
        _, report_low = run_link(pm16qam, fiber, low, num_symbols=2**12, seed=2)
        _, report_high = run_link(pm16qam, fiber, high, num_symbols=2**12, seed=2)
        assert report_high.mi < report_low.mi

    def test_launch_power_excludes_tx_noise(self, pm16qam):
        # lossless linear fiber: output = launched signal + TX noise on top of it
        fiber = FiberConfig(alpha=0.0, gamma=0.0, span_length=1.0, steps_per_span=1)
        imp = ImpairmentConfig(tx_osnr_db=20.0, rx_noise_power_dbm=None, launch_power_dbm=3.0)
        _, symbols = generate_symbols(pm16qam, 2**13, seed=4)
        received, _ = propagate(symbols, fiber, imp, seed=4)
        noise_share = 0.01 * fiber.sample_rate / 12.5e9
        npt.assert_allclose(received.power_dbm(), 3.0 + 10 * np.log10(1 + noise_share), atol=0.01)

    @pytest.mark.slow
    def test_step_halving_converges(self, pm16qam):
        # 160 km at 10 dBm: 500 and 1000 steps per span agree on EVM within 0.1 dB
        imp = ImpairmentConfig(launch_power_dbm=10.0)
        evm_db = []
        for steps in (500, 1000):
            fiber = FiberConfig(span_length=160.0, steps_per_span=steps)
            rec, _ = run_link(pm16qam, fiber, imp, num_symbols=2**12, seed=5)
            sent = pm16qam.points[rec.tx_index]
            error = np.mean(np.sum((rec.rx - sent) ** 2, axis=1))
            evm_db.append(10 * np.log10(error / np.mean(np.sum(sent**2, axis=1))))
        assert abs(evm_db[0] - evm_db[1]) < 0.1
