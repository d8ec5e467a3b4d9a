from typing import Optional

import numpy as np
from scipy import fft

from .config import FiberConfig
from .symbols import symbols_to_fields
from .waveform import DualPolWaveform

__all__ = ['matched_filter', 'pulse_shape', 'rrc_spectrum', 'samples_per_symbol']


def rrc_spectrum(n: int, sps: int, rolloff: float) -> np.ndarray:
    """
    Root-raised-cosine transfer function on the `fftfreq(n)` grid.

    H(f) = sqrt(sps * RC(f)), with f in units of the symbol rate. The sps
    factor makes shaping followed by matched filtering and decimation an
    exact identity on the symbols.

    Args:
        n (int): FFT length, a multiple of sps.
        sps (int): Samples per symbol.
        rolloff (float): Roll-off factor in [0, 1].

    Returns:
        np.ndarray: Real, non-negative array of length n.
    """
    f = np.abs(fft.fftfreq(n) * sps)
    lower = (1 - rolloff) / 2
    upper = (1 + rolloff) / 2

    rc = np.where(f <= lower, 1.0, 0.0)
    if rolloff > 0:
        band = (f > lower) & (f < upper)
        rc[band] = 0.5 * (1 + np.cos(np.pi / rolloff * (f[band] - lower)))
    else:
        rc[np.isclose(f, 0.5, rtol=0, atol=1e-12)] = 0.5
    return np.sqrt(sps * rc)


def samples_per_symbol(wave: DualPolWaveform, cfg: FiberConfig) -> int:
    """Integer oversampling of `wave` relative to the configured symbol rate."""
    ratio = wave.sample_rate / cfg.symbol_rate
    sps = int(round(ratio))
    if sps < 1 or abs(ratio - sps) > 1e-9 * ratio:
        raise ValueError('sample rate is not an integer multiple of the symbol rate')
    return sps


def pulse_shape(
    symbols: np.ndarray, cfg: FiberConfig, oversampling: Optional[int] = None
) -> DualPolWaveform:
    """
    Shape 4D symbols into a dual-polarization RRC waveform.

    The filter is applied in the frequency domain over the whole block, so the
    shaping is circular and has no edge transients.

    Args:
        symbols (np.ndarray): (D, 4) real symbols [Re x, Im x, Re y, Im y].
        cfg (FiberConfig): Symbol rate, roll-off and default oversampling.
        oversampling (int, optional): Overrides `cfg.oversampling`.

    Returns:
        DualPolWaveform: Sampled at oversampling * symbol_rate.
    """
    sps = cfg.oversampling if oversampling is None else int(oversampling)
    fields = symbols_to_fields(symbols)
    n = fields.shape[1] * sps

    upsampled = np.zeros((2, n), dtype=complex)
    upsampled[:, ::sps] = fields
    spectrum = fft.fft(upsampled, axis=-1, workers=cfg.fft_workers)
    spectrum *= rrc_spectrum(n, sps, cfg.rrc_rolloff)
    shaped = fft.ifft(spectrum, axis=-1, workers=cfg.fft_workers)
    return DualPolWaveform.from_stacked(shaped, cfg.symbol_rate * sps)


def matched_filter(wave: DualPolWaveform, cfg: FiberConfig) -> np.ndarray:
    """
    RRC matched filter followed by decimation to one sample per symbol.

    Args:
        wave (DualPolWaveform): Waveform at an integer multiple of the symbol rate.
        cfg (FiberConfig): Symbol rate and roll-off.

    Returns:
        np.ndarray: (2, D) complex symbol-rate samples [x_pol, y_pol].
    """
    sps = samples_per_symbol(wave, cfg)
    spectrum = fft.fft(wave.stacked, axis=-1, workers=cfg.fft_workers)
    spectrum *= rrc_spectrum(wave.length, sps, cfg.rrc_rolloff)
    filtered = fft.ifft(spectrum, axis=-1, workers=cfg.fft_workers)
    return filtered[:, ::sps]
