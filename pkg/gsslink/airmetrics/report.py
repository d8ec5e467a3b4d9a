import numpy as np

from ..constellation import Constellation
from ..utils import logger
from .llr import compute_llrs
from .rates import (
    bitwise_mi,
    estimate_noise_variance,
    estimate_rbmd,
    hard_decision_ber,
    mi_samples,
    rbmd_samples,
    standard_error,
)
from .records import AirReport, SymbolRecord

__all__ = ['SIGMA2_FLOOR', 'evaluate_record']

SIGMA2_FLOOR = 1e-12


def evaluate_record(rec: SymbolRecord, c: Constellation) -> AirReport:
    """
    Estimate every rate of one Monte-Carlo record.

    The auxiliary-channel variance is estimated data-aided from the record
    itself and floored at SIGMA2_FLOOR, so a noiseless record still yields
    finite LLRs.

    Args:
        rec (SymbolRecord): Transmitted indices and received samples.
        c (Constellation): Constellation used at the transmitter.

    Returns:
        AirReport: MI, R_BMD, bit-wise MI, sigma2, standard errors, pre-FEC
        BER and the LLR frame.
    """
    sigma2 = estimate_noise_variance(rec, c)
    if sigma2 < SIGMA2_FLOOR:
        logger.warning(f'noise variance {sigma2:.3g} floored at {SIGMA2_FLOOR:g}')
        sigma2 = SIGMA2_FLOOR

    frame = compute_llrs(rec, c, sigma2)
    mi_terms = mi_samples(rec, c, sigma2)
    per_bit = bitwise_mi(frame)
    rbmd = estimate_rbmd(frame, c.pmf)

    logger.debug(f'{c.name}: D={rec.count}, sigma2={sigma2:.4g}, rbmd={rbmd:.4f}')
    return AirReport(
        mi=float(np.mean(mi_terms)),
        rbmd=rbmd,
        bitwise_mi=per_bit,
        sigma2=sigma2,
        mi_stderr=standard_error(mi_terms),
        rbmd_stderr=standard_error(rbmd_samples(frame, c.pmf)),
        pre_fec_ber=hard_decision_ber(frame),
        frame=frame,
    )
