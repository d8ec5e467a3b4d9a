import numpy as np

from ..errors import ConstellationError
from ..utils import int_to_bits
from .model import Constellation

__all__ = ['build_pm16qam', 'build_ps_pm16qam']

INNER_AMPLITUDE = 1.0
OUTER_AMPLITUDE = 3.0


def _pm16qam_grid() -> tuple[np.ndarray, np.ndarray]:
    # label b1..b4 = sign bits (1 = negative), b5..b8 = amplitude bits (1 = inner)
    labels = int_to_bits(np.arange(256), 8)
    signs = 1.0 - 2.0 * labels[:, :4]
    amplitudes = np.where(labels[:, 4:] == 1, INNER_AMPLITUDE, OUTER_AMPLITUDE)
    return signs * amplitudes, labels


def build_pm16qam() -> Constellation:
    """
    Uniform PM-16QAM as a 256-point 4D constellation.

    Each real dimension is a BRGC-labeled PAM-4 (-3 -> 10, -1 -> 11, +1 -> 01,
    +3 -> 00, written as sign bit then amplitude bit). The four sign bits are
    placed first (b1-b4), followed by the four amplitude bits (b5-b8), so that
    b1-b4 select the orthant exactly as in the GSS labeling. Row j carries
    label j.

    Returns:
        Constellation: {+-1, +-3}^4 scaled to unit mean power, uniform pmf.
    """
    points, labels = _pm16qam_grid()
    return Constellation(points, labels, np.full(256, 1 / 256), 'PM-16QAM').normalized()


def build_ps_pm16qam(p_low: float) -> Constellation:
    """
    PM-16QAM with ideal per-dimension amplitude shaping.

    Every real dimension draws the inner amplitude with probability `p_low` and
    the outer one with 1 - p_low, the sign being uniform. The 4D pmf is the
    product of the four identical marginals.

    Args:
        p_low (float): Probability of the inner amplitude, in (0, 1).

    Returns:
        Constellation: PM-16QAM geometry with the shaped pmf, normalized to
        unit mean power under that pmf. p_low = 0.5 gives uniform PM-16QAM.

    Raises:
        ConstellationError: If p_low is outside (0, 1).
    """
    if not 0 < p_low < 1:
        raise ConstellationError('p_low must lie in the open interval (0, 1)')

    points, labels = _pm16qam_grid()
    per_dimension = np.where(
        np.abs(points) == INNER_AMPLITUDE, p_low / 2, (1 - p_low) / 2
    )
    pmf = np.prod(per_dimension, axis=1)
    uniform = Constellation(points, labels, np.full(256, 1 / 256))
    return uniform.with_pmf(pmf, 'PM-16QAM-PS').normalized()
