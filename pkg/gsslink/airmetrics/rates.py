import numpy as np
from scipy.special import logsumexp

from ..constellation import Constellation
from ..utils import logger
from .llr import CHUNK, _check, _log_prior, log_metrics
from .records import LlrFrame, SymbolRecord

__all__ = [
    'bit_penalties',
    'bitwise_mi',
    'estimate_mi',
    'estimate_noise_variance',
    'estimate_rbmd',
    'hard_decision_ber',
    'mi_samples',
    'rbmd_samples',
    'standard_error',
]

LN2 = np.log(2)


def estimate_noise_variance(rec: SymbolRecord, c: Constellation) -> float:
    """
    Data-aided estimate of the total 4D noise variance.

    sigma2 = (1/D) sum_i ||y_i - x_tx(i)||^2.

    Raises:
        ValueError: If the record is empty.
    """
    if rec.count == 0:
        raise ValueError('at least one symbol is required')
    error = rec.rx - c.points[rec.tx_index]
    return float(np.mean(np.sum(error**2, axis=1)))


def mi_samples(rec: SymbolRecord, c: Constellation, sigma2: float) -> np.ndarray:
    """
    Per-symbol information terms whose mean is the MI estimate.

    term_i = log2 q(y_i|x_tx(i)) - log2 sum_j P(x_j) q(y_i|x_j).

    Returns:
        np.ndarray: Shape (D,), bits.
    """
    _check(rec, c, sigma2)
    if rec.count == 0:
        raise ValueError('at least one symbol is required')
    log_prior = _log_prior(c)

    terms = np.empty(rec.count)
    for start in range(0, rec.count, CHUNK):
        stop = min(start + CHUNK, rec.count)
        metric = log_metrics(rec.rx[start:stop], c.points, sigma2)
        sent = metric[np.arange(stop - start), rec.tx_index[start:stop]]
        terms[start:stop] = (sent - logsumexp(metric + log_prior, axis=1)) / LN2
    return terms


def estimate_mi(rec: SymbolRecord, c: Constellation, sigma2: float) -> float:
    """
    Monte-Carlo MI under the Gaussian auxiliary channel, bits/4D-symbol.

    Supports non-uniform pmfs through the prior in the denominator.

    Raises:
        ValueError: If sigma2 <= 0 or the record is empty.
    """
    return float(np.mean(mi_samples(rec, c, sigma2)))


def bit_penalties(frame: LlrFrame) -> np.ndarray:
    """
    Per-symbol, per-bit terms log2(1 + exp((-1)^c L)).

    Returns:
        np.ndarray: Shape (D, m), bits.
    """
    signed = (1.0 - 2.0 * frame.tx_bits) * frame.llrs
    return np.logaddexp(0.0, signed) / LN2


def bitwise_mi(frame: LlrFrame) -> np.ndarray:
    """
    Bit-wise MI I(C_k; Y) = 1 - (1/D) sum_i log2(1 + exp((-1)^c L)).

    Assumes uniform bit marginals; a warning is logged if the transmitted bits
    look biased.

    Args:
        frame (LlrFrame): LLRs and transmitted bits.

    Returns:
        np.ndarray: Shape (m,).
    """
    if frame.count:
        marginals = frame.tx_bits.mean(axis=0)
        slack = 0.01 + 3 * 0.5 / np.sqrt(frame.count)
        if np.any(np.abs(marginals - 0.5) > slack):
            logger.warning(
                f'bit-wise MI assumes uniform bits; observed marginals {np.round(marginals, 3)}'
            )
    return 1.0 - bit_penalties(frame).mean(axis=0)


def estimate_rbmd(frame: LlrFrame, pmf: np.ndarray) -> float:
    """
    Monte-Carlo BMD rate, bits/4D-symbol.

    R_BMD = H(X) - (1/D) sum_k sum_i log2(1 + exp((-1)^c_ki L_ki)). For a
    uniform pmf H(X) = m and the result is the sum of the bit-wise MIs,
    accumulated exactly as `bitwise_mi(frame).sum()`.

    Args:
        frame (LlrFrame): LLRs and transmitted bits.
        pmf (np.ndarray): Symbol probabilities of the transmitted constellation.

    Returns:
        float: R_BMD.
    """
    pmf = np.asarray(pmf, dtype=float)
    if np.allclose(pmf, 1 / pmf.size, rtol=0, atol=1e-12):
        return float(np.sum(bitwise_mi(frame)))

    p = pmf[pmf > 0]
    entropy = -np.sum(p * np.log2(p))
    return float(entropy - np.sum(bit_penalties(frame).mean(axis=0)))


def rbmd_samples(frame: LlrFrame, pmf: np.ndarray) -> np.ndarray:
    """Per-symbol terms H(X) - sum_k log2(1 + exp((-1)^c L)); their mean is R_BMD."""
    pmf = np.asarray(pmf, dtype=float)
    p = pmf[pmf > 0]
    entropy = -np.sum(p * np.log2(p))
    return entropy - bit_penalties(frame).sum(axis=1)


def standard_error(samples: np.ndarray) -> float:
    """Sample standard deviation over sqrt(D)."""
    samples = np.asarray(samples, dtype=float)
    if samples.size < 2:
        return float('nan')
    return float(np.std(samples, ddof=1) / np.sqrt(samples.size))


def hard_decision_ber(frame: LlrFrame) -> float:
    """BER of the hard decisions sign(L) (L > 0 decides 1) against the sent bits."""
    return float(np.mean((frame.llrs > 0) != frame.tx_bits.astype(bool)))
