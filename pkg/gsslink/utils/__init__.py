"""
Utils Submodule
================

The `utils` submodule provides helpers that are shared across the library:
unit conversions for optical powers and SNRs, binary label handling, scalar
root finding, deterministic random streams and the package logger.

Features:
---------
- **Unit Conversion**:
  - dB <-> linear, dBm <-> W and the Gaussian Q-function.

- **Binary Labels**:
  - Integer <-> bit-row conversion (MSB first, bit b1 in column 0).
  - Binary reflected Gray code sequences.

- **Root Finding**:
  - Sign-change bracketing on a grid and bisection refinement.

- **Random Streams**:
  - Counter-based (Philox) generators keyed by a seed and a purpose tag, so
    that every noise source and symbol draw has its own reproducible stream.

Modules:
--------
- `calc`: Unit conversions and the Q-function.
- `tools`: Label / bit conversion and Gray codes.
- `solve`: Sign-change interval search and bisection.
- `rand`: Seeded counter-based random streams.
- `logger`: The `gsslink` package logger.

Example:
--------
```python
from gsslink.utils import dbm2w, gray_code, bisect_solve

p = dbm2w(-20)                   # 1e-5 W
codes = gray_code(2)             # [0, 1, 3, 2]
root, iterations = bisect_solve(lambda x: x**2 - 2, 0, 2)
```
"""

from .calc import *
from .logger import *
from .rand import *
from .solve import *
from .tools import *
