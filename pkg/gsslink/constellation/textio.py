from pathlib import Path
from typing import Union

import numpy as np

from ..errors import ConstellationError, ParseError
from ..utils import bits_to_str
from .model import Constellation

__all__ = ['deserialize', 'load', 'save', 'serialize']

HEADER_KEYS = ('m', 't', 'name')


def _fmt(value: float) -> str:
    # 17 significant digits round-trip every binary64 value
    return format(float(value), '.17g')


def serialize(c: Constellation) -> str:
    """
    Render a constellation in the line-oriented text format.

    Format::

        m=<int>
        t=<int or ->
        name=<string>
        x1 x2 x3 x4 <label as binary string> <pmf>     (M lines)

    Args:
        c (Constellation): Constellation to write.

    Returns:
        str: UTF-8 text, newline terminated.
    """
    lines = [
        f'm={c.m}',
        f't={c.shells if c.shells is not None else "-"}',
        f'name={c.name}',
    ]
    for point, label, prob in zip(c.points, c.labels, c.pmf):
        coords = ' '.join(_fmt(x) for x in point)
        lines.append(f'{coords} {bits_to_str(label)} {_fmt(prob)}')
    return '\n'.join(lines) + '\n'


def _parse_header(line: str, key: str, line_no: int) -> str:
    prefix = f'{key}='
    if not line.startswith(prefix):
        raise ParseError(f"expected header '{prefix}<value>'", line_no)
    return line[len(prefix):]


def deserialize(text: str) -> Constellation:
    """
    Parse the text format produced by `serialize`.

    Args:
        text (str): File contents.

    Returns:
        Constellation: The parsed constellation.

    Raises:
        ParseError: On malformed lines (with the 1-based line number) or when the
            parsed data violates a constellation invariant.
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if len(lines) < len(HEADER_KEYS):
        raise ParseError('missing header lines', len(lines) + 1)

    raw_m, raw_t, name = (
        _parse_header(lines[i].strip(), key, i + 1) for i, key in enumerate(HEADER_KEYS)
    )
    try:
        m = int(raw_m)
    except ValueError:
        raise ParseError(f'invalid m {raw_m!r}', 1) from None
    if m < 1:
        raise ParseError('m must be positive', 1)
    try:
        shells = None if raw_t.strip() == '-' else int(raw_t)
    except ValueError:
        raise ParseError(f'invalid t {raw_t!r}', 2) from None

    size = 1 << m
    body = lines[len(HEADER_KEYS):]
    if len(body) != size:
        raise ParseError(
            f'expected {size} point lines, found {len(body)}', len(HEADER_KEYS) + 1
        )

    points = np.empty((size, 4))
    labels = np.empty((size, m), dtype=np.uint8)
    pmf = np.empty(size)
    for row, line in enumerate(body):
        line_no = row + len(HEADER_KEYS) + 1
        fields = line.split()
        if len(fields) != 6:
            raise ParseError(f'expected 6 fields, found {len(fields)}', line_no)
        label = fields[4]
        if len(label) != m or set(label) - {'0', '1'}:
            raise ParseError(f'label {label!r} is not a {m}-bit binary string', line_no)
        try:
            points[row] = [float(x) for x in fields[:4]]
            pmf[row] = float(fields[5])
        except ValueError as exc:
            raise ParseError(str(exc), line_no) from None
        labels[row] = [int(b) for b in label]

    try:
        return Constellation(points, labels, pmf, name, shells)
    except ConstellationError as exc:
        raise ParseError(str(exc)) from exc


def save(c: Constellation, path: Union[str, Path]) -> None:
    """Write `serialize(c)` to a UTF-8 file."""
    Path(path).write_text(serialize(c), encoding='utf-8')


def load(path: Union[str, Path]) -> Constellation:
    """Read a constellation file written by `save`."""
    return deserialize(Path(path).read_text(encoding='utf-8'))
