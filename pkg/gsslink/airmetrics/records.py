from dataclasses import dataclass, field
from typing import Optional

import numpy as np

__all__ = ['AirReport', 'LlrFrame', 'SymbolRecord']


@dataclass(frozen=True, eq=False)
class SymbolRecord:
    """
    Transmitted indices and received 4D samples of one Monte-Carlo run.

    Attributes:
        tx_index (np.ndarray): Constellation row of each transmitted symbol, shape (D,).
        rx (np.ndarray): Received 4D samples, shape (D, 4).

    Raises:
        ValueError: If shapes disagree or samples are not finite.
    """

    tx_index: np.ndarray
    rx: np.ndarray

    def __post_init__(self) -> None:
        tx_index = np.asarray(self.tx_index, dtype=np.int64)
        rx = np.asarray(self.rx, dtype=float)
        if tx_index.ndim != 1:
            raise ValueError('tx_index must be one-dimensional')
        if rx.shape != (tx_index.size, 4):
            raise ValueError('rx must have shape (D, 4) matching tx_index')
        if not np.all(np.isfinite(rx)):
            raise ValueError('rx must be finite')
        if np.any(tx_index < 0):
            raise ValueError('tx_index must be non-negative')
        object.__setattr__(self, 'tx_index', tx_index)
        object.__setattr__(self, 'rx', rx)

    @property
    def count(self) -> int:
        """Number of symbols D."""
        return self.tx_index.size


@dataclass(frozen=True, eq=False)
class LlrFrame:
    """
    Per-symbol, per-bit LLRs aligned with the transmitted bits.

    Attributes:
        llrs (np.ndarray): Shape (D, m), L = log P(b=1 | y) / P(b=0 | y).
        tx_bits (np.ndarray): Shape (D, m), uint8.
    """

    llrs: np.ndarray
    tx_bits: np.ndarray

    def __post_init__(self) -> None:
        llrs = np.asarray(self.llrs, dtype=float)
        tx_bits = np.asarray(self.tx_bits, dtype=np.uint8)
        if llrs.ndim != 2 or llrs.shape != tx_bits.shape:
            raise ValueError('llrs and tx_bits must both have shape (D, m)')
        object.__setattr__(self, 'llrs', llrs)
        object.__setattr__(self, 'tx_bits', tx_bits)

    @property
    def count(self) -> int:
        return self.llrs.shape[0]

    @property
    def m(self) -> int:
        return self.llrs.shape[1]


@dataclass(frozen=True, eq=False)
class AirReport:
    """
    Achievable information rates of one evaluation point.

    Attributes:
        mi (float): Mutual information, bits/4D-symbol.
        rbmd (float): BMD rate, bits/4D-symbol.
        bitwise_mi (np.ndarray): Bit-wise MI per label position, shape (m,).
        sigma2 (float): Total 4D noise variance of the Gaussian auxiliary channel.
        mi_stderr (float): Standard error of `mi`.
        rbmd_stderr (float): Standard error of `rbmd`.
        pre_fec_ber (float): Hard-decision BER from the LLR signs.
        frame (Optional[LlrFrame]): LLRs the rates were computed from.
    """

    mi: float
    rbmd: float
    bitwise_mi: np.ndarray
    sigma2: float
    mi_stderr: float = float('nan')
    rbmd_stderr: float = float('nan')
    pre_fec_ber: float = float('nan')
    frame: Optional[LlrFrame] = field(default=None, repr=False)
