from dataclasses import dataclass
from typing import Literal, Optional

import numpy as np

from ..airmetrics import LlrFrame, hard_decision_ber
from ..utils import logger, random_stream
from .hamming import DEFAULT_CHASE_Q, HammingCode, hamming_128_119
from .interleaver import deinterleave, interleave

__all__ = [
    'MIN_ERROR_EVENTS',
    'SCC_FEC_LIMIT',
    'FecResult',
    'decode_frames',
    'frame_llrs',
    'postfec_ber',
]

SCC_FEC_LIMIT = 4.5e-3
MIN_ERROR_EVENTS = 100

Mode = Literal['hd', 'sd']


@dataclass(frozen=True)
class FecResult:
    """
    Pre- and post-FEC error rates of one LLR stream.

    Attributes:
        mode (str): 'hd' (syndrome decoding) or 'sd' (Chase-I).
        pre_fec_ber (float): Hard-decision BER of the whole LLR stream.
        post_fec_ber (float): Information-bit BER after decoding.
        frames (int): Number of decoded 128-bit frames.
        bit_errors (int): Information-bit errors after decoding.
        passed (bool): post_fec_ber <= SCC_FEC_LIMIT.
        low_confidence (bool): Fewer than MIN_ERROR_EVENTS post-FEC bit errors.
    """

    mode: str
    pre_fec_ber: float
    post_fec_ber: float
    frames: int
    bit_errors: int
    passed: bool
    low_confidence: bool


def decode_frames(
    llrs: np.ndarray,
    mode: Mode = 'sd',
    code: Optional[HammingCode] = None,
    q: int = DEFAULT_CHASE_Q,
) -> np.ndarray:
    """
    Decode (F, 128) LLR frames to (F, 119) information bits.

    Raises:
        ValueError: On an unknown mode.
    """
    code = hamming_128_119 if code is None else code
    if mode == 'hd':
        info, _ = code.decode_hd_frames((np.asarray(llrs) > 0).astype(np.uint8))
        return info
    if mode == 'sd':
        return code.decode_chase1_frames(llrs, q)
    raise ValueError(f"mode must be 'hd' or 'sd', got {mode!r}")


def frame_llrs(
    frame: LlrFrame, seed: int, code: Optional[HammingCode] = None
) -> tuple[np.ndarray, np.ndarray]:
    """
    Turn a link LLR stream into code-aligned, deinterleaved LLR frames.

    The link carries uniformly random bits b. Random information words u are
    encoded and interleaved into a code stream c of the same length, and the
    LLRs are sign-aligned through the known mask b xor c:
    L_c = L (1 - 2 (b xor c)). This is exact for channels symmetric in each
    bit, and makes the random link bits act as scrambled code bits. The
    stream (row-major over symbols and label positions) is truncated to a
    whole number of frames.

    Args:
        frame (LlrFrame): LLRs and transmitted bits from the link.
        seed (int): Run seed for the 'fec-info' and interleaver streams.
        code (HammingCode, optional): Code, defaults to the (128,119) code.

    Returns:
        tuple: (deinterleaved LLR frames (F, 128), information words (F, 119)).

    Raises:
        ValueError: If the stream is shorter than one frame.
    """
    code = hamming_128_119 if code is None else code
    llrs = frame.llrs.ravel()
    tx_bits = frame.tx_bits.ravel()
    num_frames = llrs.size // code.n
    if num_frames == 0:
        raise ValueError(f'need at least {code.n} LLRs, got {llrs.size}')

    length = num_frames * code.n
    info = random_stream(seed, 'fec-info').integers(
        0, 2, size=(num_frames, code.k), dtype=np.uint8
    )
    coded = interleave(code.encode(info).ravel(), seed)

    mask = tx_bits[:length] ^ coded
    aligned = llrs[:length] * (1.0 - 2.0 * mask)
    return deinterleave(aligned, seed).reshape(num_frames, code.n), info


def postfec_ber(
    frame: LlrFrame,
    mode: Mode = 'sd',
    seed: int = 0,
    code: Optional[HammingCode] = None,
    q: int = DEFAULT_CHASE_Q,
) -> FecResult:
    """
    Measure pre- and post-FEC BER of a link LLR stream.

    The pre-FEC BER is the hard-decision BER of the full stream, identical to
    `airmetrics.hard_decision_ber`. The post-FEC BER counts information-bit
    errors after HD or Chase-I decoding of the framed stream and is checked
    against the SCC-FEC limit 4.5e-3.

    Args:
        frame (LlrFrame): LLRs and transmitted bits.
        mode (str): 'hd' or 'sd'.
        seed (int): Run seed.
        code (HammingCode, optional): Code, defaults to the (128,119) code.
        q (int): Chase-I budget for 'sd'.

    Returns:
        FecResult: Both BERs, pass flag and confidence flag.
    """
    frames, info = frame_llrs(frame, seed, code)
    decoded = decode_frames(frames, mode, code, q)
    bit_errors = int(np.count_nonzero(decoded != info))
    post = bit_errors / info.size

    low_confidence = bit_errors < MIN_ERROR_EVENTS
    if low_confidence:
        logger.warning(
            f'{mode.upper()} post-FEC BER {post:.3g} rests on {bit_errors} error events '
            f'(< {MIN_ERROR_EVENTS})'
        )
    return FecResult(
        mode=mode,
        pre_fec_ber=hard_decision_ber(frame),
        post_fec_ber=post,
        frames=frames.shape[0],
        bit_errors=bit_errors,
        passed=post <= SCC_FEC_LIMIT,
        low_confidence=low_confidence,
    )
