from typing import Optional

import numpy as np
from scipy import fft

from ..airmetrics import SymbolRecord
from ..errors import AlignmentError
from ..utils import logger
from .config import FiberConfig
from .pulse import matched_filter
from .ssfm import cd_compensate
from .symbols import fields_to_symbols, symbols_to_fields
from .waveform import DualPolWaveform

__all__ = ['MIN_CORRELATION', 'align', 'default_discard', 'ls_gain', 'receiver_dsp']

MIN_CORRELATION = 0.1
MAX_DISCARD = 1024


def default_discard(num_symbols: int) -> int:
    """Edge symbols dropped at each end: min(1024, D // 16)."""
    return min(MAX_DISCARD, num_symbols // 16)


def align(received: np.ndarray, reference: np.ndarray) -> tuple[np.ndarray, int]:
    """
    Circularly align received symbols to the reference by FFT cross-correlation.

    The correlation is summed over both polarizations, and its peak magnitude
    is normalized by the two sequence energies.

    Args:
        received (np.ndarray): (2, D) complex received symbols.
        reference (np.ndarray): (2, D) complex transmitted symbols.

    Returns:
        tuple: (aligned received symbols, lag in symbols).

    Raises:
        AlignmentError: If the normalized correlation peak is below MIN_CORRELATION.
    """
    spectrum = fft.fft(received, axis=-1) * np.conj(fft.fft(reference, axis=-1))
    correlation = np.sum(fft.ifft(spectrum, axis=-1), axis=0)
    lag = int(np.argmax(np.abs(correlation)))

    energy = np.sqrt(np.sum(np.abs(received) ** 2) * np.sum(np.abs(reference) ** 2))
    peak = np.abs(correlation[lag]) / energy if energy > 0 else 0.0
    if not peak >= MIN_CORRELATION:
        raise AlignmentError(
            f'correlation peak {peak:.3g} below {MIN_CORRELATION}; transmitted sequence not found'
        )
    logger.debug(f'alignment lag {lag}, normalized peak {peak:.3f}')
    return np.roll(received, -lag, axis=-1), lag


def ls_gain(received: np.ndarray, reference: np.ndarray) -> np.ndarray:
    """Per-polarization least-squares complex gain h = sum r s* / sum |s|^2."""
    return np.sum(received * np.conj(reference), axis=-1) / np.sum(
        np.abs(reference) ** 2, axis=-1
    )


def receiver_dsp(
    wave: DualPolWaveform,
    cfg: FiberConfig,
    tx_symbols: np.ndarray,
    tx_index: np.ndarray,
    length: Optional[float] = None,
    discard: Optional[int] = None,
) -> SymbolRecord:
    """
    Recover 4D symbols from the received waveform.

    Chain: chromatic-dispersion compensation, RRC matched filter and
    decimation, correlation alignment, edge discard, and a data-aided
    complex scale-and-phase correction per polarization.

    Args:
        wave (DualPolWaveform): Received waveform.
        cfg (FiberConfig): Fiber and waveform parameters.
        tx_symbols (np.ndarray): (D, 4) transmitted (pilot) symbols.
        tx_index (np.ndarray): (D,) constellation rows of `tx_symbols`.
        length (float, optional): Fiber length to compensate, defaults to `cfg.span_length`.
        discard (int, optional): Symbols dropped at each end, defaults to
            `default_discard(D)`.

    Returns:
        SymbolRecord: Received samples in constellation units aligned with `tx_index`.

    Raises:
        AlignmentError: If the transmitted sequence cannot be located.
    """
    reference = symbols_to_fields(tx_symbols)
    num_symbols = reference.shape[1]
    discard = default_discard(num_symbols) if discard is None else int(discard)
    if 2 * discard >= num_symbols:
        raise ValueError('discard leaves no symbols')

    received = matched_filter(cd_compensate(wave, cfg, length), cfg)
    received, _ = align(received, reference)

    kept = slice(discard, num_symbols - discard)
    received = received[:, kept]
    reference = reference[:, kept]

    gain = ls_gain(received, reference)
    if np.any(gain == 0):
        raise AlignmentError('zero least-squares gain')
    received = received / gain[:, np.newaxis]

    return SymbolRecord(np.asarray(tx_index)[kept], fields_to_symbols(received))
