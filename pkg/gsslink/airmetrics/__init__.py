"""
Airmetrics Submodule
====================

The `airmetrics` submodule estimates achievable information rates (AIRs) of
a 4D constellation from Monte-Carlo records of transmitted indices and
received samples.

All estimates use a mismatched Gaussian auxiliary channel: one scalar total
noise variance sigma2 spread equally over the four real dimensions. The
receiver therefore never needs to know the true channel law.

Features:
---------
- **LLRs**:
  - Exact log-domain bit LLRs for any pmf, clamped to +-50.

- **Rates**:
  - Mutual information (symbol-wise decoding).
  - BMD rate and bit-wise MI (bit-wise decoding, BRGC labels).
  - Standard errors and hard-decision pre-FEC BER.

- **Reference Results**:
  - Approximate BER of square M-QAM and its inverse (required Eb/N0).
  - MI and GMI of square QAM on AWGN by Gauss-Hermite quadrature.

Modules:
--------
- `records`: `SymbolRecord`, `LlrFrame`, `AirReport`.
- `llr`: Auxiliary-channel metrics and LLR computation.
- `rates`: sigma2, MI, R_BMD, bit-wise MI estimators.
- `report`: `evaluate_record`, which bundles everything into an `AirReport`.
- `ber`: Analytic QAM BER and SNR conversions.
- `reference`: Quadrature AWGN oracle for square QAM.

Example:
--------
```python
from gsslink.constellation import build_pm16qam
from gsslink.fiberlink import run_awgn

rec, report = run_awgn(build_pm16qam(), snr_db=13.5, num_symbols=2**16, seed=1)
print(report.mi, report.rbmd, report.bitwise_mi)
```
"""

from .ber import *
from .llr import *
from .rates import *
from .records import *
from .reference import *
from .report import *
