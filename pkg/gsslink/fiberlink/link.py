from dataclasses import replace

import numpy as np
from scipy import fft

from ..airmetrics import AirReport, SymbolRecord, evaluate_record
from ..constellation import Constellation
from ..errors import ConfigError
from ..utils import db2lin, lin2db, logger, random_stream
from .config import FiberConfig, ImpairmentConfig
from .noise import add_rx_noise, add_tx_noise
from .pulse import pulse_shape
from .receiver import receiver_dsp
from .ssfm import ssfm_propagate
from .symbols import generate_symbols
from .waveform import DualPolWaveform, scale_to_power

__all__ = [
    'GUARD_OVERSAMPLING',
    'GUARD_THRESHOLD_DB',
    'min_launch_power',
    'out_of_band_ratio',
    'propagate',
    'run_awgn',
    'run_link',
]

GUARD_THRESHOLD_DB = -30.0
GUARD_OVERSAMPLING = 4


def min_launch_power(
    span_length: float, rx_min_input_dbm: float = -20.0, alpha: float = 0.2
) -> float:
    """
    Smallest launch power meeting the receiver input requirement.

    Args:
        span_length (float): km, non-negative.
        rx_min_input_dbm (float): Minimum received power in dBm.
        alpha (float): Attenuation in dB/km.

    Returns:
        float: rx_min_input_dbm + alpha * span_length, in dBm.

    Raises:
        ValueError: If span_length is negative.
    """
    if span_length < 0:
        raise ValueError('span_length must be non-negative')
    return float(rx_min_input_dbm + alpha * span_length)


def out_of_band_ratio(wave: DualPolWaveform, cfg: FiberConfig) -> float:
    """
    Power outside the RRC band (1 + rolloff) / 2 * symbol_rate relative to
    the total, in dB.
    """
    spectrum = np.abs(fft.fft(wave.stacked, axis=-1, workers=cfg.fft_workers)) ** 2
    f = np.abs(fft.fftfreq(wave.length, d=1 / wave.sample_rate))
    edge = (1 + cfg.rrc_rolloff) / 2 * cfg.symbol_rate
    outside = np.sum(spectrum[:, f > edge * (1 + 1e-9)])
    return float(lin2db(max(outside / np.sum(spectrum), 1e-30)))


def _launch(
    symbols: np.ndarray, fiber: FiberConfig, imp: ImpairmentConfig, seed: int
) -> DualPolWaveform:
    signal = scale_to_power(pulse_shape(symbols, fiber), imp.launch_power_dbm)
    return add_tx_noise(signal, imp.tx_osnr_db, seed)


def propagate(
    symbols: np.ndarray,
    fiber: FiberConfig,
    imp: ImpairmentConfig,
    seed: int,
) -> tuple[DualPolWaveform, FiberConfig]:
    """
    Shape, scale to the launch power, load with transmitter noise and
    propagate through the span. The launch power is the signal power; the
    TX noise comes on top of it at the configured OSNR.

    If propagation raises the out-of-band share of the power by more than
    GUARD_THRESHOLD_DB (nonlinear products reaching the simulation band edge),
    the waveform is regenerated at GUARD_OVERSAMPLING samples per symbol and
    propagated again.

    Returns:
        tuple: (waveform after the fiber, before receiver noise; fiber config
        actually used).
    """
    wave = _launch(symbols, fiber, imp, seed)
    received = ssfm_propagate(wave, fiber, None)

    if fiber.oversampling < GUARD_OVERSAMPLING and fiber.gamma != 0:
        growth = db2lin(out_of_band_ratio(received, fiber)) - db2lin(
            out_of_band_ratio(wave, fiber)
        )
        leakage = float(lin2db(max(float(growth), 1e-30)))
        if leakage > GUARD_THRESHOLD_DB:
            logger.warning(
                f'out-of-band power grew by {leakage:.1f} dB, above {GUARD_THRESHOLD_DB:g} dB; '
                f'propagating again at {GUARD_OVERSAMPLING} samples/symbol'
            )
            fiber = replace(fiber, oversampling=GUARD_OVERSAMPLING)
            wave = _launch(symbols, fiber, imp, seed)
            received = ssfm_propagate(wave, fiber, None)
    return received, fiber


def run_link(
    c: Constellation,
    fiber: FiberConfig,
    imp: ImpairmentConfig,
    num_symbols: int,
    seed: int,
) -> tuple[SymbolRecord, AirReport]:
    """
    Simulate the full link for one constellation and evaluate its rates.

    generate -> RRC shape -> TX noise -> SSFM -> RX noise -> receiver DSP ->
    sigma2 estimate -> LLRs -> AirReport. Every random draw comes from a
    (seed, purpose) stream, so the same inputs give bit-identical results.

    Args:
        c (Constellation): Constellation, normalized to unit mean power.
        fiber (FiberConfig): Fiber span and waveform parameters.
        imp (ImpairmentConfig): Noise loading and launch power.
        num_symbols (int): Sequence length D.
        seed (int): Run seed.

    Returns:
        tuple: (SymbolRecord, AirReport).

    Raises:
        ConfigError: If the minimum launch power is enforced and not met.
        NumericalError: On propagation or alignment failures.
    """
    if imp.enforce_min_power:
        floor = min_launch_power(fiber.span_length, imp.rx_min_input_dbm, fiber.alpha)
        if imp.launch_power_dbm < floor:
            raise ConfigError(
                f'{imp.launch_power_dbm:g} dBm is below the minimum {floor:g} dBm',
                'launch_power_dbm',
            )

    tx_index, symbols = generate_symbols(c, num_symbols, seed)
    received, used = propagate(symbols, fiber, imp, seed)
    received = add_rx_noise(received, imp.rx_noise_power_dbm, seed, used.symbol_rate)

    rec = receiver_dsp(received, used, symbols, tx_index)
    report = evaluate_record(rec, c)
    logger.info(
        f'{c.name} @ {fiber.span_length:g} km, {imp.launch_power_dbm:g} dBm: '
        f'MI={report.mi:.4f}, R_BMD={report.rbmd:.4f}'
    )
    return rec, report


def run_awgn(
    c: Constellation, snr_db: float, num_symbols: int, seed: int
) -> tuple[SymbolRecord, AirReport]:
    """
    Fiber-bypassed pure AWGN channel.

    Adds white Gaussian noise of total 4D variance sigma2 = P / SNR (each real
    dimension sigma2 / 4) to the symbols, P being the mean power of `c`.

    Args:
        c (Constellation): Constellation.
        snr_db (float): 4D-symbol SNR in dB.
        num_symbols (int): Sequence length D.
        seed (int): Run seed.

    Returns:
        tuple: (SymbolRecord, AirReport).
    """
    tx_index, symbols = generate_symbols(c, num_symbols, seed)
    sigma2 = c.mean_power() / db2lin(snr_db)
    noise = np.sqrt(sigma2 / 4) * random_stream(seed, 'awgn').standard_normal(symbols.shape)
    rec = SymbolRecord(tx_index, symbols + noise)
    return rec, evaluate_record(rec, c)
