from typing import Optional

import numpy as np

from ..utils import db2lin, dbm2w, random_stream
from .config import OSNR_REFERENCE_BANDWIDTH
from .waveform import DualPolWaveform

__all__ = ['add_rx_noise', 'add_tx_noise', 'complex_awgn']


def complex_awgn(rng: np.random.Generator, shape: tuple, variance: float) -> np.ndarray:
    """Circular complex Gaussian samples with E|n|^2 = variance."""
    scale = np.sqrt(variance / 2)
    return scale * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def _add_noise(
    wave: DualPolWaveform, total_variance: float, seed: int, purpose: str
) -> DualPolWaveform:
    rng = random_stream(seed, purpose)
    noise = complex_awgn(rng, (2, wave.length), total_variance / 2)
    return DualPolWaveform.from_stacked(wave.stacked + noise, wave.sample_rate)


def add_tx_noise(
    wave: DualPolWaveform, tx_osnr_db: Optional[float], seed: int = 0
) -> DualPolWaveform:
    """
    Load the transmitter waveform with white noise at a given in-band OSNR.

    The noise power over the simulation bandwidth B = sample_rate is
    P_sig * 10^(-OSNR/10) * B / 12.5 GHz, split equally over both
    polarizations, so the noise within 0.1 nm matches the OSNR.

    Args:
        wave (DualPolWaveform): Transmitter waveform.
        tx_osnr_db (Optional[float]): OSNR in dB/0.1 nm; None returns `wave` unchanged.
        seed (int): Run seed for the 'tx-noise' stream.

    Returns:
        DualPolWaveform: Noisy waveform.
    """
    if tx_osnr_db is None:
        return wave
    total = wave.power() * db2lin(-tx_osnr_db) * wave.sample_rate / OSNR_REFERENCE_BANDWIDTH
    return _add_noise(wave, float(total), seed, 'tx-noise')


def add_rx_noise(
    wave: DualPolWaveform,
    rx_noise_power_dbm: Optional[float],
    seed: int = 0,
    symbol_rate: Optional[float] = None,
) -> DualPolWaveform:
    """
    Add receiver noise of an absolute power referenced to the symbol rate.

    White noise whose power within the symbol-rate bandwidth equals
    `rx_noise_power_dbm` (total of both polarizations). After the matched
    filter the symbol SNR is then P_rx / P_noise.

    Args:
        wave (DualPolWaveform): Received waveform in absolute units.
        rx_noise_power_dbm (Optional[float]): Noise power; None returns `wave` unchanged.
        seed (int): Run seed for the 'rx-noise' stream.
        symbol_rate (float, optional): Reference bandwidth in Hz, defaults to
            the sample rate (symbol-rate samples).

    Returns:
        DualPolWaveform: Noisy waveform.
    """
    if rx_noise_power_dbm is None:
        return wave
    reference = wave.sample_rate if symbol_rate is None else symbol_rate
    total = dbm2w(rx_noise_power_dbm) * wave.sample_rate / reference
    return _add_noise(wave, float(total), seed, 'rx-noise')
