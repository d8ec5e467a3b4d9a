from typing import Optional

import numpy as np
from scipy import fft
from tqdm.auto import tqdm

from ..errors import NumericalError
from ..utils import logger, w2dbm
from .config import FiberConfig
from .waveform import DualPolWaveform, scale_to_power

__all__ = ['MANAKOV_FACTOR', 'cd_compensate', 'ssfm_propagate']

MANAKOV_FACTOR = 8 / 9


def _omega(wave: DualPolWaveform) -> np.ndarray:
    return 2 * np.pi * wave.sample_rate * fft.fftfreq(wave.length)


def _effective_step(alpha: float, h: float) -> float:
    if alpha == 0:
        return h
    return 2 * np.sinh(alpha * h / 2) / alpha


def ssfm_propagate(
    wave: DualPolWaveform,
    cfg: FiberConfig,
    launch_power_dbm: Optional[float],
    length: Optional[float] = None,
) -> DualPolWaveform:
    """
    Propagate a dual-polarization waveform through one fiber span.

    The Manakov equation is integrated with the symmetric split-step Fourier
    method over `cfg.steps_per_span` uniform steps of size h:

        linear half-step:  exp((-alpha/2 + j beta2/2 w^2) h/2) in the frequency domain
        nonlinear step:    exp(j 8/9 gamma (|Ex|^2 + |Ey|^2) h_eff), h_eff = 2 sinh(alpha h/2)/alpha

    The nonlinear step uses the power at the step midpoint, so h_eff is the
    loss-weighted length of the step around that point. Adjacent linear
    half-steps are merged.

    Args:
        wave (DualPolWaveform): Input waveform.
        cfg (FiberConfig): Fiber parameters.
        launch_power_dbm (Optional[float]): Total launch power of both
            polarizations the input is scaled to; None launches `wave` as
            given, in absolute units.
        length (float, optional): Span length in km, defaults to `cfg.span_length`.

    Returns:
        DualPolWaveform: Output waveform in absolute units, sqrt(W).

    Raises:
        NumericalError: If the field becomes non-finite, with the step index.
    """
    length = cfg.span_length if length is None else float(length)
    steps = cfg.steps_per_span
    h = length / steps
    alpha = cfg.alpha_neper
    nonlinear = MANAKOV_FACTOR * cfg.gamma * _effective_step(alpha, h)

    if launch_power_dbm is not None:
        wave = scale_to_power(wave, launch_power_dbm)
    omega = _omega(wave)
    operator = -alpha / 2 + 0.5j * cfg.beta2_s2 * omega**2
    half_step = np.exp(operator * h / 2)
    full_step = half_step**2

    logger.debug(
        f'SSFM: {length:g} km in {steps} steps, {wave.length} samples, '
        f'launch {float(w2dbm(wave.power())):.2f} dBm'
    )

    spectrum = fft.fft(wave.stacked, axis=-1, workers=cfg.fft_workers)
    spectrum *= half_step
    for step in tqdm(range(steps), disable=not cfg.progress, desc='SSFM', leave=False):
        fields = fft.ifft(spectrum, axis=-1, workers=cfg.fft_workers)
        power = np.abs(fields[0]) ** 2 + np.abs(fields[1]) ** 2
        fields *= np.exp(1j * nonlinear * power)
        if not np.all(np.isfinite(fields)):
            raise NumericalError('non-finite field in split-step propagation', step)
        spectrum = fft.fft(fields, axis=-1, workers=cfg.fft_workers)
        spectrum *= full_step if step < steps - 1 else half_step

    fields = fft.ifft(spectrum, axis=-1, workers=cfg.fft_workers)
    if not np.all(np.isfinite(fields)):
        raise NumericalError('non-finite field in split-step propagation', steps)
    return DualPolWaveform.from_stacked(fields, wave.sample_rate)


def cd_compensate(
    wave: DualPolWaveform, cfg: FiberConfig, length: Optional[float] = None
) -> DualPolWaveform:
    """
    Undo the chromatic dispersion of `length` km of fiber.

    Applies exp(-j beta2/2 w^2 L) to both polarizations. Loss is left alone.

    Args:
        wave (DualPolWaveform): Received waveform.
        cfg (FiberConfig): Fiber parameters.
        length (float, optional): Fiber length in km, defaults to `cfg.span_length`.

    Returns:
        DualPolWaveform: Dispersion-compensated waveform.
    """
    length = cfg.span_length if length is None else float(length)
    omega = _omega(wave)
    inverse = np.exp(-0.5j * cfg.beta2_s2 * omega**2 * length)
    spectrum = fft.fft(wave.stacked, axis=-1, workers=cfg.fft_workers)
    fields = fft.ifft(spectrum * inverse, axis=-1, workers=cfg.fft_workers)
    return DualPolWaveform.from_stacked(fields, wave.sample_rate)
