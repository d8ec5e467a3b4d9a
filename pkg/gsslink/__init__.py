"""
gsslink Package (4D Geometric Shell Shaping over a 400ZR link)
==============================================================

The `gsslink` package builds 4D geometric-shell-shaped (GSS) constellations,
evaluates them with Monte-Carlo achievable information rates over a simulated
single-span, single-channel, dual-polarization fiber link with 400ZR-style
transceiver noise loading and inner Hamming FEC, and optimizes their
parameters with a derivative-free pattern search.

Submodules:
-----------
- **constellation**:
  - GSS construction (uniform t-shell division, X-Y symmetry, orthant symmetry),
    PM-16QAM and PS-PM-16QAM baselines, PAPR / DOF / shell metrics and a
    lossless text format.

- **airmetrics**:
  - Gaussian auxiliary-channel LLRs, MI, BMD rate and bit-wise MI estimators,
    the analytic Gray-QAM BER formula and a Gauss-Hermite AWGN reference.

- **fiberlink**:
  - Symbol generation, RRC shaping, Manakov split-step propagation,
    transmitter OSNR and receiver noise loading, receiver DSP.

- **fec**:
  - Double-extended (128,119) Hamming code with hard-decision and Chase-I
    decoding, seeded interleaving and a post-FEC BER harness.

- **optimizer**:
  - Bound-constrained generalized pattern search with common random numbers.

- **cli**:
  - `gsslink evaluate | optimize | fec-ber | export`.

- **utils**:
  - Unit conversion, bit/label helpers, root bracketing, random streams, logger.

Usage Example:
--------------
```python
from gsslink.constellation import build_pm16qam, papr
from gsslink.fiberlink import run_awgn

c = build_pm16qam()
print(papr(c))                      # 1.8

record, report = run_awgn(c, snr_db=13.5, num_symbols=2**14, seed=1)
print(report.mi, report.rbmd)
```
"""

import importlib as _importlib

__version__ = '0.1.0'

MODULES = [
    'airmetrics',
    'cli',
    'constellation',
    'errors',
    'fec',
    'fiberlink',
    'optimizer',
    'utils',
]


def __getattr__(name):
    if name in MODULES:
        return _importlib.import_module(f'gsslink.{name}')
    else:
        raise AttributeError(f"Module 'gsslink' has no attribute '{name}'")
