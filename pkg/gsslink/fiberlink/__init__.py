"""
Fiberlink Submodule
===================

The `fiberlink` submodule simulates a single-span, single-channel,
dual-polarization coherent link with 400ZR-style transceiver noise loading
and turns the received waveform back into 4D symbol records.

Features:
---------
- **Transmitter**:
  - i.i.d. symbol draws from the constellation pmf (counter-based streams).
  - Frequency-domain root-raised-cosine shaping.
  - White noise loading at a given in-band OSNR (dB/0.1 nm).

- **Fiber**:
  - Symmetric split-step Fourier integration of the Manakov equation with
    loss, dispersion and the 8/9 Kerr factor.
  - Spectral guard that re-propagates at 4 samples/symbol when nonlinear
    products leak out of band.

- **Receiver**:
  - Absolute-power receiver noise referenced to the symbol rate.
  - Dispersion compensation, matched filter, correlation alignment and
    per-polarization least-squares gain.

- **Runs**:
  - `run_link` for the whole chain and `run_awgn` for the fiber-bypassed channel.

Modules:
--------
- `config`: `FiberConfig` and `ImpairmentConfig`.
- `waveform`: `DualPolWaveform` and power scaling.
- `symbols`: Symbol generation and 4D <-> field conversion.
- `pulse`: RRC shaping and matched filtering.
- `ssfm`: Split-step propagation and dispersion compensation.
- `noise`: Transmitter and receiver noise loading.
- `receiver`: Receiver DSP.
- `link`: Minimum launch power, end-to-end runs.

Example:
--------
```python
from gsslink.constellation import build_pm16qam
from gsslink.fiberlink import FiberConfig, ImpairmentConfig, run_link

fiber = FiberConfig(span_length=160)
imp = ImpairmentConfig(launch_power_dbm=12)
record, report = run_link(build_pm16qam(), fiber, imp, num_symbols=2**16, seed=1)
print(report.rbmd)
```
"""

from .config import *
from .link import *
from .noise import *
from .pulse import *
from .receiver import *
from .ssfm import *
from .symbols import *
from .waveform import *
