"""
Constellation Submodule
=======================

The `constellation` submodule builds the 4D constellations evaluated by the
rest of the library and computes their structural metrics.

A 4D GSS constellation with m bits per symbol is described by only
3 * 2^(m-5) + t numbers: t shell radii and three spherical angles for each of
the 2^(m-5) free points of the first orthant. Three fixed operations expand
them into 2^m labeled points:

1. uniform t-shell division: the free points are spread equally over t shells;
2. X-Y symmetry: each point is copied with its polarizations swapped (one bit);
3. orthant symmetry: the 2^(m-4) points are mirrored into all 16 orthants,
   with the four sign bits placed first in the label.

Features:
---------
- **Construction**:
  - GSS from `GssParameters`, uniform PM-16QAM and PS-PM-16QAM baselines.
  - Each step of the GSS chain is exposed on its own.

- **Metrics**:
  - PAPR, degrees of freedom, number of 4D shells, per-polarization power.

- **Text Format**:
  - Lossless line-oriented serialization (17 significant digits).

Modules:
--------
- `model`: `Constellation` and `GssParameters` with their invariants.
- `gss`: The GSS construction chain and parameter bounds.
- `qam`: PM-16QAM and probabilistically shaped PM-16QAM.
- `metrics`: PAPR, DOF and shell counting.
- `textio`: serialize / deserialize / save / load.

Example:
--------
```python
import numpy as np
from gsslink.constellation import GssParameters, build_gss, papr, dof_count

params = GssParameters(
    m=8, t=4,
    radii=np.array([0.4, 0.6, 0.8, 1.0]),
    angles=np.full((8, 3), np.pi / 4) + 0.01 * np.arange(8)[:, None],
)
c = build_gss(params)
print(c.size, papr(c), dof_count(8, 4))   # 256, ..., 28
```
"""

from .gss import *
from .metrics import *
from .model import *
from .qam import *
from .textio import *
