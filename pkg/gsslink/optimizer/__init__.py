"""
Optimizer Submodule
===================

The `optimizer` submodule searches GSS parameters (or the PS-PM-16QAM
amplitude probability) that maximize R_BMD or MI over the simulated link.

Features:
---------
- **Pattern Search**:
  - Bound-constrained generalized pattern search with complete coordinate
    polling, mesh expansion/contraction and a deterministic trace.
  - Optional concurrent evaluation of the polls of one iteration.

- **Objectives**:
  - Link objectives with common random numbers: every candidate sees the same
    symbol indices and noise draws.
  - Staggered midpoint initialization of the GSS box.

Modules:
--------
- `options`: `SearchOptions`, `SearchTrace`.
- `pattern_search`: The search itself.
- `objective`: Link objectives, `optimize_gss`, `optimize_ps`.

Example:
--------
```python
import numpy as np
from gsslink.optimizer import SearchOptions, pattern_search

target = np.array([0.3, -0.2])
best, trace = pattern_search(
    lambda v: -np.sum((v - target) ** 2),
    lower=np.full(2, -1.0), upper=np.full(2, 1.0), init=np.zeros(2),
    opts=SearchOptions(max_evaluations=500),
)
```
"""

from .objective import *
from .options import *
from .pattern_search import *
