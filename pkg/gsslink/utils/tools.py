from typing import Union

import numpy as np

__all__ = ['bits_to_int', 'bits_to_str', 'gray_code', 'int_to_bits']


def int_to_bits(
    values: Union[int, list, np.ndarray],
    width: int,
) -> np.ndarray:
    """
    Convert integers to rows of bits, most significant bit first.

    Column 0 holds the most significant bit, so a label row reads b1 b2 ... bm.

    Args:
        values (Union[int, list, np.ndarray]): Non-negative integer(s).
        width (int): Number of bits per value.

    Returns:
        np.ndarray: uint8 array of shape (..., width).

    Raises:
        ValueError: If a value does not fit into `width` bits.
    """
    values = np.asarray(values, dtype=np.int64)
    if width < 0:
        raise ValueError('Bit width must be non-negative')
    if np.any(values < 0) or np.any(values >= (1 << width)):
        raise ValueError(f'Values must lie in [0, 2**{width})')
    shifts = np.arange(width - 1, -1, -1, dtype=np.int64)
    return ((values[..., np.newaxis] >> shifts) & 1).astype(np.uint8)


def bits_to_int(bits: Union[list, np.ndarray]) -> np.ndarray:
    """
    Convert rows of bits (most significant bit first) to integers.

    Args:
        bits (Union[list, np.ndarray]): Array of shape (..., width) with 0/1 entries.

    Returns:
        np.ndarray: int64 array of shape (...).
    """
    bits = np.asarray(bits, dtype=np.int64)
    width = bits.shape[-1]
    weights = 1 << np.arange(width - 1, -1, -1, dtype=np.int64)
    return bits @ weights


def bits_to_str(bits: Union[list, np.ndarray]) -> str:
    """Render one bit row as a binary string, e.g. [1, 0, 1] -> '101'."""
    return ''.join('1' if b else '0' for b in np.asarray(bits).ravel())


def gray_code(n: int) -> np.ndarray:
    """
    Binary reflected Gray code of `n` bits.

    Args:
        n (int): Number of bits.

    Returns:
        np.ndarray: Integers g_0, ..., g_{2^n - 1} with consecutive entries
        differing in exactly one bit.

    Raises:
        ValueError: If n is negative.
    """
    if n < 0:
        raise ValueError('n must be non-negative')
    i = np.arange(1 << n, dtype=np.int64)
    return i ^ (i >> 1)
