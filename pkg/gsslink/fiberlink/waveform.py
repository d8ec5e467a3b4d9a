from dataclasses import dataclass

import numpy as np

from ..utils import dbm2w, w2dbm

__all__ = ['DualPolWaveform', 'scale_to_power']


@dataclass(frozen=True, eq=False)
class DualPolWaveform:
    """
    Sampled complex envelope of both polarizations.

    Attributes:
        x_pol (np.ndarray): X-polarization samples, sqrt(W).
        y_pol (np.ndarray): Y-polarization samples, sqrt(W).
        sample_rate (float): Hz.

    Raises:
        ValueError: On unequal lengths or non-finite samples.
    """

    x_pol: np.ndarray
    y_pol: np.ndarray
    sample_rate: float

    def __post_init__(self) -> None:
        x_pol = np.asarray(self.x_pol, dtype=complex)
        y_pol = np.asarray(self.y_pol, dtype=complex)
        if x_pol.ndim != 1 or x_pol.shape != y_pol.shape:
            raise ValueError('x_pol and y_pol must be 1-D and of equal length')
        if not (np.all(np.isfinite(x_pol)) and np.all(np.isfinite(y_pol))):
            raise ValueError('waveform samples must be finite')
        if not self.sample_rate > 0:
            raise ValueError('sample_rate must be positive')
        object.__setattr__(self, 'x_pol', x_pol)
        object.__setattr__(self, 'y_pol', y_pol)

    @classmethod
    def from_stacked(cls, fields: np.ndarray, sample_rate: float) -> 'DualPolWaveform':
        """Build from a (2, N) array of [x_pol, y_pol]."""
        return cls(fields[0], fields[1], sample_rate)

    @property
    def stacked(self) -> np.ndarray:
        """(2, N) copy of [x_pol, y_pol]."""
        return np.stack([self.x_pol, self.y_pol])

    @property
    def length(self) -> int:
        return self.x_pol.size

    def power(self) -> float:
        """Mean total power of both polarizations in W."""
        return float(np.mean(np.abs(self.x_pol) ** 2 + np.abs(self.y_pol) ** 2))

    def power_dbm(self) -> float:
        return float(w2dbm(self.power()))


def scale_to_power(wave: DualPolWaveform, power_dbm: float) -> DualPolWaveform:
    """
    Scale a waveform to a total power of `power_dbm` over both polarizations.

    Raises:
        ValueError: If the waveform carries no power.
    """
    current = wave.power()
    if not current > 0:
        raise ValueError('cannot scale a waveform with zero power')
    gain = np.sqrt(dbm2w(power_dbm) / current)
    return DualPolWaveform(wave.x_pol * gain, wave.y_pol * gain, wave.sample_rate)
