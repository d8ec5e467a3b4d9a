import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, TextIO, Union

import numpy as np

from .. import __version__

__all__ = [
    'CSV_VERSION',
    'SweepRow',
    'read_csv',
    'rows_from_csv',
    'sweep_columns',
    'write_csv',
]

CSV_VERSION = 1


@dataclass
class SweepRow:
    """One (distance, launch power) result line."""

    distance_km: float
    launch_power_dbm: float
    mi: float
    rbmd: float
    bitwise_mi: np.ndarray
    papr: float
    sigma2: float
    pre_fec_ber: float
    mi_stderr: float = float('nan')
    rbmd_stderr: float = float('nan')
    post_fec_ber_hd: float = float('nan')
    post_fec_ber_sd: float = float('nan')
    fec_pass_hd: Optional[bool] = None
    fec_pass_sd: Optional[bool] = None
    low_confidence: Optional[bool] = None
    p_low: float = float('nan')
    pushed_above_optimal: bool = False

    def values(self) -> list:
        """Values in `sweep_columns(m)` order."""
        flags = [self.fec_pass_hd, self.fec_pass_sd, self.low_confidence]
        return (
            [self.distance_km, self.launch_power_dbm, self.mi, self.rbmd]
            + [float(v) for v in self.bitwise_mi]
            + [self.papr, self.sigma2, self.mi_stderr, self.rbmd_stderr, self.pre_fec_ber]
            + [self.post_fec_ber_hd, self.post_fec_ber_sd]
            + ['' if f is None else int(f) for f in flags]
            + [self.p_low, int(self.pushed_above_optimal)]
        )


def sweep_columns(m: int) -> list[str]:
    """Fixed column set of sweep CSVs for m-bit constellations."""
    return (
        ['distance_km', 'launch_power_dbm', 'mi', 'rbmd']
        + [f'bitwise_mi_b{k}' for k in range(1, m + 1)]
        + ['papr', 'sigma2', 'mi_stderr', 'rbmd_stderr', 'pre_fec_ber']
        + ['post_fec_ber_hd', 'post_fec_ber_sd', 'fec_pass_hd', 'fec_pass_sd']
        + ['low_confidence', 'p_low', 'pushed_above_optimal']
    )


def _header(command: str, config: dict, config_text: str) -> dict:
    return {
        'tool': 'gsslink',
        'version': __version__,
        'csv_version': CSV_VERSION,
        'command': command,
        'config': config,
        'config_text': config_text,
    }


def _dump(stream: TextIO, header: dict, columns: list[str], rows: list[list]) -> None:
    stream.write('# ' + json.dumps(header, sort_keys=True, default=str) + '\n')
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([repr(float(v)) if isinstance(v, (float, np.floating)) else v for v in row])


def write_csv(
    path: Optional[Union[str, Path]],
    command: str,
    config: dict,
    columns: list[str],
    rows: list[list],
    config_text: str = '',
) -> str:
    """
    Write rows as CSV with a '# {json}' first line carrying the tool version
    and the full configuration.

    Floats are written with repr so that they round-trip exactly.

    Args:
        path: Output file, or None for stdout.
        command (str): Subcommand that produced the rows.
        config (dict): Resolved configuration (file plus flags) echoed into the header.
        columns (list): Column names.
        rows (list): Row values.
        config_text (str): Config file text, echoed verbatim.

    Returns:
        str: The written text.
    """
    buffer = io.StringIO()
    _dump(buffer, _header(command, config, config_text), columns, rows)
    text = buffer.getvalue()
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding='utf-8')
    return text


def read_csv(path: Union[str, Path]) -> tuple[dict, list[dict[str, Any]]]:
    """
    Read a file written by `write_csv`.

    Returns:
        tuple: (header dict, list of rows as column -> string dicts).

    Raises:
        ValueError: If the header line is missing.
    """
    with Path(path).open(encoding='utf-8', newline='') as stream:
        first = stream.readline()
        if not first.startswith('# '):
            raise ValueError('missing JSON header line')
        header = json.loads(first[2:])
        rows = list(csv.DictReader(stream))
    return header, rows


def _flag(text: str) -> Optional[bool]:
    return None if text == '' else bool(int(text))


def rows_from_csv(path: Union[str, Path]) -> tuple[dict, list[SweepRow]]:
    """
    Read a sweep CSV back into SweepRows.

    Returns:
        tuple: (header dict, rows in file order).

    Raises:
        ValueError: If the header line or a sweep column is missing.
    """
    header, records = read_csv(path)
    rows = []
    for record in records:
        try:
            bits = sorted(
                (k for k in record if k.startswith('bitwise_mi_b')),
                key=lambda k: int(k[len('bitwise_mi_b') :]),
            )
            rows.append(
                SweepRow(
                    distance_km=float(record['distance_km']),
                    launch_power_dbm=float(record['launch_power_dbm']),
                    mi=float(record['mi']),
                    rbmd=float(record['rbmd']),
                    bitwise_mi=np.array([float(record[k]) for k in bits]),
                    papr=float(record['papr']),
                    sigma2=float(record['sigma2']),
                    pre_fec_ber=float(record['pre_fec_ber']),
                    mi_stderr=float(record['mi_stderr']),
                    rbmd_stderr=float(record['rbmd_stderr']),
                    post_fec_ber_hd=float(record['post_fec_ber_hd']),
                    post_fec_ber_sd=float(record['post_fec_ber_sd']),
                    fec_pass_hd=_flag(record['fec_pass_hd']),
                    fec_pass_sd=_flag(record['fec_pass_sd']),
                    low_confidence=_flag(record['low_confidence']),
                    p_low=float(record['p_low']),
                    pushed_above_optimal=bool(int(record['pushed_above_optimal'])),
                )
            )
        except KeyError as err:
            raise ValueError(f'{path}: missing sweep column {err}') from err
    return header, rows
