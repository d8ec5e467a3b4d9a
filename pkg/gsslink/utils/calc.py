from typing import Union

import numpy as np
from scipy.special import erfc

__all__ = ['db2lin', 'dbm2w', 'lin2db', 'qfunc', 'w2dbm']

ArrayLike = Union[float, np.ndarray]


def db2lin(value_db: ArrayLike) -> ArrayLike:
    """
    Convert a value in dB to a linear power ratio.

    Args:
        value_db (ArrayLike): Value in dB.

    Returns:
        ArrayLike: Linear ratio.
    """
    return 10 ** (np.asarray(value_db, dtype=float) / 10)


def lin2db(value: ArrayLike) -> ArrayLike:
    """
    Convert a linear power ratio to dB.

    Args:
        value (ArrayLike): Linear ratio, must be positive.

    Returns:
        ArrayLike: Value in dB.
    """
    return 10 * np.log10(np.asarray(value, dtype=float))


def dbm2w(power_dbm: ArrayLike) -> ArrayLike:
    """Convert optical power from dBm to W."""
    return 1e-3 * db2lin(power_dbm)


def w2dbm(power_w: ArrayLike) -> ArrayLike:
    """Convert optical power from W to dBm."""
    return lin2db(np.asarray(power_w, dtype=float) / 1e-3)


def qfunc(x: ArrayLike) -> ArrayLike:
    """
    Gaussian tail probability Q(x) = P(N(0, 1) > x).

    Args:
        x (ArrayLike): Argument(s).

    Returns:
        ArrayLike: Q(x), computed through the complementary error function.
    """
    return 0.5 * erfc(np.asarray(x, dtype=float) / np.sqrt(2))
