"""
CLI Submodule
=============

The `cli` submodule is the command-line front end of gsslink.

Subcommands:
------------
- `evaluate`: MI, R_BMD and bit-wise MI over a distance x launch power grid,
  with the received-power rule (rows pushed above the optimal launch power
  are flagged).
- `optimize`: Pattern search of a GSS constellation at one operating point;
  writes the constellation file and the search trace.
- `fec-ber`: As `evaluate`, plus HD and Chase-I post-FEC BER with pass/fail
  against the SCC-FEC limit.
- `export`: Constellation file plus a JSON summary (PAPR, DOF, shells,
  power per polarization).
- `reach`: Reach of two `fec-ber` CSVs at a BER limit and the relative
  gain of the first over the second, as JSON.

Configuration:
--------------
`key = value` lines, '#' comments. Lists are comma separated and accept
inclusive `start:stop:step` ranges::

    constellation = pm16qam
    distances = 120:200:20
    launch_powers = 6:16:0.5
    symbols = 2**16
    tx_osnr_db = 34
    rx_noise_power_dbm = -33.5

Unknown keys are rejected. Flags (`--seed`, `--out`, `--workers`,
`--metric`, `--constellation`, `--progress`) override file values.
`progress = true` shows tqdm bars over sweep points and split steps.

Output:
-------
CSV with a first line `# {json}` holding the tool version, the CSV version
the resolved configuration (`config`) and the config file text as given
(`config_text`), so every row can be reproduced from the file.

Exit codes: 0 success, 2 configuration or parse error, 3 numerical failure.

Modules:
--------
- `config`: `RunConfig` and the config file parser.
- `output`: `SweepRow` and the CSV writer / reader.
- `commands`: The subcommands.
- `analysis`: Optimal launch power rows, the received-power rule, pass
  distance, reach gain.
- `main`: argparse entry point.
"""

from .analysis import *
from .commands import *
from .config import *
from .output import *
