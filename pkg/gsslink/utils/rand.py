import zlib

import numpy as np

__all__ = ['random_stream']


def random_stream(seed: int, purpose: str) -> np.random.Generator:
    """
    Counter-based random generator for one purpose of one run.

    The Philox key is derived from the run seed and a purpose tag (for example
    'symbols' or 'rx-noise'), so independent noise sources never share draws and
    a given (seed, purpose) pair always reproduces the same sequence regardless
    of evaluation order or concurrency.

    Args:
        seed (int): Run seed, non-negative.
        purpose (str): Stream tag.

    Returns:
        np.random.Generator: Generator backed by `np.random.Philox`.

    Raises:
        ValueError: If seed is negative.
    """
    if seed < 0:
        raise ValueError('Seed must be non-negative')
    tag = zlib.crc32(purpose.encode('utf-8'))
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, tag])))
