from enum import IntEnum

import numpy as np
from sympy import GF
from sympy.polys.matrices import DomainMatrix

from ..utils import bits_to_int, int_to_bits

__all__ = ['DEFAULT_CHASE_Q', 'MAX_CHASE_Q', 'DecodeStatus', 'HammingCode', 'hamming_128_119']

DEFAULT_CHASE_Q = 4
MAX_CHASE_Q = 16
TEST_WORD_BUDGET = 1 << 16


class DecodeStatus(IntEnum):
    """Outcome of hard-decision syndrome decoding."""

    OK = 0
    CORRECTED = 1
    DETECTED = 2


class HammingCode:
    """
    Double-extended (128,119) Hamming code in systematic form.

    Parity-check construction: column j of the 9 x 128 matrix H is a 7-bit
    nonzero vector v (v != 127) extended by two bits chosen so that the whole
    column has odd weight ((0, 0) if wt(v) is odd, otherwise (1, 0) for
    v < 64 and (0, 1) for v >= 64), plus the two unit vectors of rows 8 and 9.
    All 128 columns are distinct and of odd weight, so no sum of up to three
    columns vanishes and d_min >= 4. The seven weight-one v together with the
    two unit vectors form I_9, giving H = [A | I_9] and the encoder
    c = [u, A u mod 2].

    Syndrome decoding: a syndrome equal to a column flips that bit, zero means
    a codeword, anything else (every double error) is reported as detected.
    """

    def __init__(self) -> None:
        info_columns, parity_columns = [], {}
        for v in range(1, 127):
            top = int_to_bits(v, 7)
            if top.sum() % 2:
                ext = (0, 0)
            else:
                ext = (1, 0) if v < 64 else (0, 1)
            column = np.concatenate([top, ext]).astype(np.uint8)
            if top.sum() == 1:
                parity_columns[6 - (v.bit_length() - 1)] = column
            else:
                info_columns.append(column)
        parity_columns[7] = np.eye(9, dtype=np.uint8)[7]
        parity_columns[8] = np.eye(9, dtype=np.uint8)[8]

        self._a = np.array(info_columns, dtype=np.uint8).T
        identity = np.array([parity_columns[r] for r in range(9)], dtype=np.uint8).T
        self._h = np.hstack([self._a, identity])
        self._h.setflags(write=False)
        self._a.setflags(write=False)

        self._table = np.full(1 << self.r, -1, dtype=np.int64)
        self._table[bits_to_int(self._h.T)] = np.arange(self.n)

    @property
    def n(self) -> int:
        return 128

    @property
    def k(self) -> int:
        return 119

    @property
    def r(self) -> int:
        return self.n - self.k

    @property
    def rate(self) -> float:
        return self.k / self.n

    @property
    def parity_check(self) -> np.ndarray:
        """H = [A | I_9], shape (9, 128)."""
        return self._h

    @property
    def generator(self) -> np.ndarray:
        """G = [I_119 | A^T], shape (119, 128)."""
        return np.hstack([np.eye(self.k, dtype=np.uint8), self._a.T])

    def rank(self) -> int:
        """Rank of H over GF(2), computed exactly."""
        return DomainMatrix.from_list(self._h.tolist(), GF(2)).rank()

    def _check(self, bits: np.ndarray, length: int, what: str) -> np.ndarray:
        bits = np.asarray(bits)
        if bits.shape[-1:] != (length,):
            raise ValueError(f'{what} must have length {length}, got shape {bits.shape}')
        return bits

    def encode(self, info: np.ndarray) -> np.ndarray:
        """
        Systematic encoding of one (119,) word or a (F, 119) batch.

        Raises:
            ValueError: On a length mismatch.
        """
        info = self._check(info, self.k, 'info').astype(np.uint8)
        parity = (info.astype(np.int64) @ self._a.T.astype(np.int64)) % 2
        return np.concatenate([info, parity.astype(np.uint8)], axis=-1)

    def syndromes(self, words: np.ndarray) -> np.ndarray:
        """Integer syndromes (b1 = first row as MSB) of words shaped (..., 128)."""
        words = self._check(words, self.n, 'word')
        syn = (words.astype(np.int64) @ self._h.T.astype(np.int64)) % 2
        return bits_to_int(syn)

    def correct(self, words: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """
        Syndrome-decode words shaped (F, 128).

        Returns:
            tuple: (corrected words, DecodeStatus codes as uint8). Detected
            words are returned unchanged.
        """
        words = self._check(words, self.n, 'word').astype(np.uint8)
        syn = self.syndromes(words)
        column = self._table[syn]

        status = np.full(syn.shape, DecodeStatus.DETECTED, dtype=np.uint8)
        status[syn == 0] = DecodeStatus.OK
        fixable = (syn != 0) & (column >= 0)
        status[fixable] = DecodeStatus.CORRECTED

        corrected = words.copy()
        rows = np.nonzero(fixable)
        corrected[rows + (column[fixable],)] ^= 1
        return corrected, status

    def decode_hd_frames(self, words: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Hard-decision decoding of (F, 128) words -> ((F, 119) info, (F,) status)."""
        words = np.atleast_2d(words)
        corrected, status = self.correct(words)
        return corrected[:, : self.k], status

    def decode_hd(self, word: np.ndarray) -> tuple[np.ndarray, DecodeStatus]:
        """
        Hard-decision decoding of one 128-bit word.

        Corrects any single error and detects any double error. A detected word
        is returned uncorrected (best-effort information bits).

        Returns:
            tuple: ((119,) information bits, DecodeStatus).
        """
        word = self._check(word, self.n, 'word')
        info, status = self.decode_hd_frames(word.reshape(1, -1))
        return info[0], DecodeStatus(int(status[0]))

    def decode_chase1_frames(
        self, llrs: np.ndarray, q: int = DEFAULT_CHASE_Q
    ) -> np.ndarray:
        """
        Chase-I soft-decision decoding of (F, 128) LLR frames.

        L > 0 decides bit 1. For every frame, all 2^q flip patterns over the q
        smallest |L| are hard-decoded; among the test words that decode, the
        codeword with the least discrepancy sum(|L| over bits differing from
        the hard decision) wins. Ties go to the earliest pattern in binary
        counting order, pattern 0 being the plain hard decision. Frames where
        nothing decodes fall back to the hard-decision output.

        Args:
            llrs (np.ndarray): Shape (F, 128).
            q (int): Number of least-reliable positions, >= 0.

        Returns:
            np.ndarray: (F, 119) information bits.

        Raises:
            ValueError: If q lies outside [0, MAX_CHASE_Q].
        """
        if not 0 <= q <= MAX_CHASE_Q:
            raise ValueError(f'q must lie in [0, {MAX_CHASE_Q}]')
        llrs = np.atleast_2d(self._check(llrs, self.n, 'llrs')).astype(float)
        patterns = int_to_bits(np.arange(1 << q), q) if q else np.zeros((1, 0), np.uint8)

        # frames * 2^q test words per block
        chunk = max(1, TEST_WORD_BUDGET >> q)
        out = np.empty((llrs.shape[0], self.k), dtype=np.uint8)
        for start in range(0, llrs.shape[0], chunk):
            block = llrs[start : start + chunk]
            out[start : start + chunk] = self._chase_block(block, patterns)
        return out

    def _chase_block(self, llrs: np.ndarray, patterns: np.ndarray) -> np.ndarray:
        frames = llrs.shape[0]
        reliability = np.abs(llrs)
        hard = (llrs > 0).astype(np.uint8)
        weakest = np.argsort(reliability, axis=1, kind='stable')[:, : patterns.shape[1]]

        flips = np.zeros((frames, patterns.shape[0], self.n), dtype=np.uint8)
        rows = np.arange(frames)[:, np.newaxis, np.newaxis]
        cols = np.arange(patterns.shape[0])[np.newaxis, :, np.newaxis]
        flips[rows, cols, weakest[:, np.newaxis, :]] = patterns[np.newaxis, :, :]
        tests = hard[:, np.newaxis, :] ^ flips

        candidates, status = self.correct(tests.reshape(-1, self.n))
        candidates = candidates.reshape(tests.shape)
        status = status.reshape(tests.shape[:2])

        metric = np.sum(
            reliability[:, np.newaxis, :] * (candidates != hard[:, np.newaxis, :]),
            axis=-1,
        )
        metric[status == DecodeStatus.DETECTED] = np.inf
        best = np.argmin(metric, axis=1)

        chosen = candidates[np.arange(frames), best]
        failed = np.isinf(metric[np.arange(frames), best])
        chosen[failed] = hard[failed]
        return chosen[:, : self.k]

    def decode_chase1(self, llrs: np.ndarray, q: int = DEFAULT_CHASE_Q) -> np.ndarray:
        """Chase-I decoding of one (128,) LLR frame -> (119,) information bits."""
        llrs = self._check(llrs, self.n, 'llrs')
        return self.decode_chase1_frames(llrs.reshape(1, -1), q)[0]


hamming_128_119 = HammingCode()
