from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..errors import ConfigError

__all__ = ['FiberConfig', 'ImpairmentConfig', 'OSNR_REFERENCE_BANDWIDTH']

# 0.1 nm at 1550 nm
OSNR_REFERENCE_BANDWIDTH = 12.5e9


@dataclass(frozen=True)
class FiberConfig:
    """
    Standard single-mode fiber span and waveform parameters.

    Attributes:
        alpha (float): Attenuation in dB/km.
        beta2 (float): Group-velocity dispersion in ps^2/km.
        gamma (float): Nonlinear coefficient in 1/(W km).
        span_length (float): Span length in km.
        steps_per_span (int): Uniform split-step count.
        symbol_rate (float): Baud.
        oversampling (int): Samples per symbol of the propagated waveform.
        rrc_rolloff (float): Roll-off of the root-raised-cosine pulse.
        fft_workers (int): Worker threads handed to `scipy.fft`.
        progress (bool): Show a tqdm bar over the split steps.

    Raises:
        ConfigError: If a field is out of range.
    """

    alpha: float = 0.2
    beta2: float = -21.68
    gamma: float = 1.2
    span_length: float = 160.0
    steps_per_span: int = 1000
    symbol_rate: float = 59.84e9
    oversampling: int = 2
    rrc_rolloff: float = 0.05
    fft_workers: int = 1
    progress: bool = False

    def __post_init__(self) -> None:
        if self.alpha < 0:
            raise ConfigError('must be non-negative', 'alpha')
        if not self.span_length > 0:
            raise ConfigError('must be positive', 'span_length')
        if int(self.steps_per_span) != self.steps_per_span or self.steps_per_span < 1:
            raise ConfigError('must be an integer >= 1', 'steps_per_span')
        if int(self.oversampling) != self.oversampling or self.oversampling < 2:
            raise ConfigError('must be an integer >= 2', 'oversampling')
        if not 0 <= self.rrc_rolloff <= 1:
            raise ConfigError('must lie in [0, 1]', 'rrc_rolloff')
        if not self.symbol_rate > 0:
            raise ConfigError('must be positive', 'symbol_rate')
        if self.fft_workers == 0:
            raise ConfigError('must be non-zero', 'fft_workers')

    @property
    def sample_rate(self) -> float:
        """Sampling rate of the propagated waveform in Hz."""
        return self.symbol_rate * self.oversampling

    @property
    def alpha_neper(self) -> float:
        """Power attenuation in 1/km."""
        return self.alpha / (10 * np.log10(np.e))

    @property
    def beta2_s2(self) -> float:
        """Dispersion in s^2/km."""
        return self.beta2 * 1e-24

    @property
    def step_size(self) -> float:
        """Split-step length in km."""
        return self.span_length / self.steps_per_span


@dataclass(frozen=True)
class ImpairmentConfig:
    """
    Transceiver noise loading and launch power.

    Attributes:
        tx_osnr_db (Optional[float]): In-band transmitter OSNR in dB/0.1 nm,
            None disables the transmitter noise.
        rx_min_input_dbm (float): Minimum received signal power in dBm.
        rx_noise_power_dbm (Optional[float]): Receiver noise power in dBm over the
            symbol-rate bandwidth, None disables it.
        launch_power_dbm (float): Total launch power of both polarizations.
        enforce_min_power (bool): Reject launch powers whose received power
            would fall below `rx_min_input_dbm`.
    """

    tx_osnr_db: Optional[float] = 34.0
    rx_min_input_dbm: float = -20.0
    rx_noise_power_dbm: Optional[float] = -33.5
    launch_power_dbm: float = 0.0
    enforce_min_power: bool = False

    def __post_init__(self) -> None:
        for name in ('tx_osnr_db', 'rx_noise_power_dbm', 'launch_power_dbm'):
            value = getattr(self, name)
            if value is not None and not np.isfinite(value):
                raise ConfigError('must be finite', name)
