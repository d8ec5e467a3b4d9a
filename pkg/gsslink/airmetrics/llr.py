import numpy as np
from scipy.special import logsumexp

from ..constellation import Constellation
from .records import LlrFrame, SymbolRecord

__all__ = ['LLR_CLAMP', 'compute_llrs', 'log_metrics']

LLR_CLAMP = 50.0
CHUNK = 4096


def _check(rec: SymbolRecord, c: Constellation, sigma2: float) -> None:
    if not sigma2 > 0:
        raise ValueError('sigma2 must be positive')
    if rec.count and rec.tx_index.max() >= c.size:
        raise ValueError('tx_index out of range for the constellation')


def _log_prior(c: Constellation) -> np.ndarray:
    with np.errstate(divide='ignore'):
        return np.log(c.pmf)


def log_metrics(rx: np.ndarray, points: np.ndarray, sigma2: float) -> np.ndarray:
    """
    Log of the 4D Gaussian auxiliary channel up to a constant.

    log q(y|x) = -||y - x||^2 / (sigma2 / 2) + const, i.e. each real
    dimension carries noise variance sigma2 / 4.

    Args:
        rx (np.ndarray): Received samples, shape (B, 4).
        points (np.ndarray): Constellation points, shape (M, 4).
        sigma2 (float): Total 4D noise variance.

    Returns:
        np.ndarray: Shape (B, M).
    """
    diff = rx[:, np.newaxis, :] - points[np.newaxis, :, :]
    return -np.sum(diff**2, axis=-1) / (sigma2 / 2)


def compute_llrs(rec: SymbolRecord, c: Constellation, sigma2: float) -> LlrFrame:
    """
    Bit LLRs under the mismatched Gaussian auxiliary channel.

    L_k = log sum_{j: b_k = 1} q(y|x_j) P(x_j) - log sum_{j: b_k = 0} q(y|x_j) P(x_j),
    evaluated with log-sum-exp and clamped to +-LLR_CLAMP. With a uniform pmf
    the prior cancels and this is the uniform-signaling LLR.

    Args:
        rec (SymbolRecord): Transmitted indices and received samples.
        c (Constellation): Constellation used at the transmitter.
        sigma2 (float): Total 4D noise variance, positive.

    Returns:
        LlrFrame: LLRs and the transmitted bits.

    Raises:
        ValueError: If sigma2 is not positive.
    """
    _check(rec, c, sigma2)
    ones = c.labels.astype(bool)
    log_prior = _log_prior(c)

    llrs = np.empty((rec.count, c.m))
    with np.errstate(divide='ignore'):
        for start in range(0, rec.count, CHUNK):
            stop = min(start + CHUNK, rec.count)
            metric = log_metrics(rec.rx[start:stop], c.points, sigma2) + log_prior
            for k in range(c.m):
                llrs[start:stop, k] = logsumexp(
                    metric[:, ones[:, k]], axis=1
                ) - logsumexp(metric[:, ~ones[:, k]], axis=1)

    np.clip(llrs, -LLR_CLAMP, LLR_CLAMP, out=llrs)
    return LlrFrame(llrs, c.labels[rec.tx_index])
