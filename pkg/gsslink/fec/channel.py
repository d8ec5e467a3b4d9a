import numpy as np
from scipy.special import erfcinv

from ..utils import random_stream

__all__ = ['bpsk_llrs']


def bpsk_llrs(bits: np.ndarray, channel_ber: float, seed: int) -> np.ndarray:
    """
    LLRs of bits sent over BPSK-AWGN with a given hard-decision BER.

    Bit 1 is sent as +1, bit 0 as -1, y = s + n with n ~ N(0, s^2) where
    Q(1 / s) = channel_ber, and L = 2 y / s^2 (positive favours bit 1).

    Args:
        bits (np.ndarray): Transmitted bits, any shape.
        channel_ber (float): Target raw BER in (0, 0.5).
        seed (int): Run seed for the 'bpsk' stream.

    Returns:
        np.ndarray: LLRs with the shape of `bits`.

    Raises:
        ValueError: If channel_ber is outside (0, 0.5).
    """
    if not 0 < channel_ber < 0.5:
        raise ValueError('channel_ber must lie in (0, 0.5)')
    bits = np.asarray(bits)
    sigma = 1 / (np.sqrt(2) * erfcinv(2 * channel_ber))
    y = (2.0 * bits - 1.0) + sigma * random_stream(seed, 'bpsk').standard_normal(bits.shape)
    return 2 * y / sigma**2
