import numpy as np

from ..utils import random_stream

__all__ = ['deinterleave', 'interleave', 'permutation']


def permutation(length: int, seed: int) -> np.ndarray:
    """Fixed random permutation of `length` positions from the ('interleaver', seed) stream."""
    return random_stream(seed, 'interleaver').permutation(length)


def interleave(bits: np.ndarray, seed: int) -> np.ndarray:
    """
    Bit-wise fixed random permutation: out[i] = bits[perm[i]].

    Works on any 1-D array (bits or LLRs).
    """
    bits = np.asarray(bits)
    return bits[permutation(bits.size, seed)]


def deinterleave(bits: np.ndarray, seed: int) -> np.ndarray:
    """Inverse of `interleave` for the same seed and length."""
    bits = np.asarray(bits)
    out = np.empty_like(bits)
    out[permutation(bits.size, seed)] = bits
    return out
