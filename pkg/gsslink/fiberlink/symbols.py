import numpy as np

from ..constellation import Constellation
from ..utils import logger, random_stream

__all__ = ['generate_symbols', 'symbols_to_fields', 'fields_to_symbols']


def generate_symbols(
    c: Constellation, num_symbols: int, seed: int
) -> tuple[np.ndarray, np.ndarray]:
    """
    Draw i.i.d. symbols from the constellation pmf.

    The draw uses the ('symbols', seed) Philox stream, so identical
    (c, num_symbols, seed) always yield the identical sequence.

    Args:
        c (Constellation): Source constellation.
        num_symbols (int): Sequence length D >= 1.
        seed (int): Run seed.

    Returns:
        tuple: (tx_index of shape (D,), 4D symbols of shape (D, 4)).

    Raises:
        ValueError: If num_symbols < 1.
    """
    if num_symbols < 1:
        raise ValueError('num_symbols must be at least 1')
    rng = random_stream(seed, 'symbols')
    tx_index = rng.choice(c.size, size=num_symbols, p=c.pmf)
    logger.debug(f'drew {num_symbols} symbols of {c.name} with seed {seed}')
    return tx_index, c.points[tx_index]


def symbols_to_fields(symbols: np.ndarray) -> np.ndarray:
    """(D, 4) real symbols -> (2, D) complex [x_pol, y_pol]."""
    symbols = np.asarray(symbols, dtype=float)
    return np.stack([symbols[:, 0] + 1j * symbols[:, 1], symbols[:, 2] + 1j * symbols[:, 3]])


def fields_to_symbols(fields: np.ndarray) -> np.ndarray:
    """(2, D) complex [x_pol, y_pol] -> (D, 4) real [Re x, Im x, Re y, Im y]."""
    return np.stack(
        [fields[0].real, fields[0].imag, fields[1].real, fields[1].imag], axis=1
    )
