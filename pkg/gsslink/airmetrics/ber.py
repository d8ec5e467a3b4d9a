import numpy as np

from ..utils import bisect_solve, db2lin, find_sign_change_interval, qfunc

__all__ = [
    'analytic_qam_ber',
    'ebn0_from_snr',
    'required_ebn0',
    'snr_from_ebn0',
]


def _check_square_qam(order: int) -> int:
    bits = int(order).bit_length() - 1
    if order < 4 or (1 << bits) != order or bits % 2:
        raise ValueError('M must be a square QAM order 4, 16, 64, ...')
    return bits


def analytic_qam_ber(order: int, ebn0_db: float) -> float:
    """
    Approximate BER of Gray-coded square M-QAM on the AWGN channel.

        Pe = 4/m (1 - 1/sqrt(M)) sum_{i=1}^{sqrt(M)/2} Q((2i - 1) sqrt(3 Eb/N0 m / (M - 1)))

    Args:
        order (int): Constellation size M (4, 16, 64, ...).
        ebn0_db (float): Eb/N0 in dB.

    Returns:
        float: Bit error probability.

    Raises:
        ValueError: If M is not a square power of 4.
    """
    bits = _check_square_qam(order)
    side = int(np.sqrt(order))
    ebn0 = db2lin(ebn0_db)
    odd = 2 * np.arange(1, side // 2 + 1) - 1
    terms = qfunc(odd * np.sqrt(3 * ebn0 * bits / (order - 1)))
    return float(4 / bits * (1 - 1 / side) * np.sum(terms))


def required_ebn0(order: int, target_ber: float, eps: float = 1e-4) -> float:
    """
    Invert `analytic_qam_ber` by bisection.

    Args:
        order (int): Square QAM order.
        target_ber (float): Target BER in (0, 0.5).
        eps (float): Final bracket width in dB.

    Returns:
        float: Eb/N0 in dB reaching the target (16QAM at 1.25e-2 -> 7.53 dB).

    Raises:
        ValueError: If the order or the target is invalid.
    """
    _check_square_qam(order)
    if not 0 < target_ber < 0.5:
        raise ValueError('target_ber must lie in (0, 0.5)')

    def gap(ebn0_db: float) -> float:
        return analytic_qam_ber(order, ebn0_db) - target_ber

    a, b = find_sign_change_interval(gap, (-20.0, 40.0), step=1.0)
    root, _ = bisect_solve(gap, a, b, eps=eps)
    return root


def snr_from_ebn0(order: int, ebn0_db: float) -> float:
    """Symbol SNR in dB: Es/N0 = Eb/N0 + 10 log10(log2 M)."""
    return float(ebn0_db + 10 * np.log10(np.log2(order)))


def ebn0_from_snr(order: int, snr_db: float) -> float:
    """Inverse of `snr_from_ebn0`."""
    return float(snr_db - 10 * np.log10(np.log2(order)))
