"""
FEC Submodule
=============

The `fec` submodule implements the inner code of the 400ZR concatenated
scheme, a double-extended (128,119) Hamming code, and measures post-FEC BER
on LLR streams produced by the link.

The outer staircase code is represented only by its input threshold
(SCC-FEC limit 4.5e-3): a post-Hamming BER at or below it is taken as
error-free after the outer decoder.

Features:
---------
- **Code**:
  - Systematic encoder, exact GF(2) rank check of the parity-check matrix.
  - Syndrome (hard-decision) decoding: single errors corrected, double errors
    detected.
  - Chase-I soft-decision decoding over the q least-reliable positions.

- **Framing**:
  - Seeded bit interleaver and its inverse.
  - Code alignment of random link bits through a scrambling mask.

- **Measurement**:
  - Pre/post-FEC BER with pass/fail and a low-confidence flag.
  - BPSK-equivalent LLR source at a target channel BER.

Modules:
--------
- `hamming`: `HammingCode`, `DecodeStatus`.
- `interleaver`: `interleave`, `deinterleave`.
- `channel`: `bpsk_llrs`.
- `harness`: `postfec_ber`, `FecResult`.

Example:
--------
```python
import numpy as np
from gsslink.fec import bpsk_llrs, hamming_128_119

info = np.zeros((1000, 119), dtype=np.uint8)
llrs = bpsk_llrs(hamming_128_119.encode(info), 1.5e-2, seed=1)
decoded = hamming_128_119.decode_chase1_frames(llrs, q=4)
print(np.mean(decoded != info))
```
"""

from .channel import *
from .hamming import *
from .harness import *
from .interleaver import *
