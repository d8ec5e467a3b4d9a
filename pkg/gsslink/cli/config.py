from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Callable, Optional, Union

import numpy as np

from ..constellation import (
    Constellation,
    build_gss,
    build_pm16qam,
    build_ps_pm16qam,
    load,
    validate_shape,
)
from ..errors import ConfigError, ConstellationError
from ..fec import MAX_CHASE_Q
from ..fiberlink import FiberConfig, ImpairmentConfig
from ..optimizer import METRICS, SearchOptions, midpoint_init

__all__ = [
    'BUILTIN_CONSTELLATIONS',
    'RunConfig',
    'load_config',
    'parse_config_text',
    'parse_float_list',
]

BUILTIN_CONSTELLATIONS = ('pm16qam', 'pm16qam-ps', 'gss')


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ('1', 'true', 'yes', 'on'):
        return True
    if lowered in ('0', 'false', 'no', 'off'):
        return False
    raise ValueError(f'not a boolean: {text!r}')


def _parse_optional_float(text: str) -> Optional[float]:
    return None if text.strip().lower() in ('none', 'off') else float(text)


def _parse_int(text: str) -> int:
    text = text.strip()
    if '**' in text:
        base, exponent = text.split('**', 1)
        return int(base) ** int(exponent)
    return int(text)


def parse_float_list(text: str) -> tuple[float, ...]:
    """
    Parse a comma-separated list whose items are numbers or inclusive ranges.

    'start:stop:step' expands to start, start + step, ..., up to stop
    (inclusive within 1e-9 of a step), e.g. '10:12:0.5, 14' ->
    (10.0, 10.5, 11.0, 11.5, 12.0, 14.0).

    Raises:
        ValueError: On malformed items, zero steps or an empty result.
    """
    values: list[float] = []
    for item in text.split(','):
        item = item.strip()
        if not item:
            continue
        if ':' in item:
            parts = [float(p) for p in item.split(':')]
            if len(parts) != 3:
                raise ValueError(f'range must be start:stop:step, got {item!r}')
            start, stop, step = parts
            if step == 0 or (stop - start) * step < 0:
                raise ValueError(f'range {item!r} does not reach its end')
            count = int(np.floor((stop - start) / step + 1e-9)) + 1
            values.extend(float(start + i * step) for i in range(count))
        else:
            values.append(float(item))
    if not values:
        raise ValueError('list is empty')
    return tuple(values)


@dataclass(frozen=True)
class RunConfig:
    """
    Complete configuration of one CLI run.

    Attributes:
        constellation (str): 'pm16qam', 'pm16qam-ps', 'gss' or a constellation file.
        p_low (float): Inner-amplitude probability of 'pm16qam-ps'.
        ps_optimize (bool): Optimize p_low per sweep point ('pm16qam-ps').
        gss_m (int): Bits per symbol of 'gss' and of `optimize`.
        gss_t (int): Shells of 'gss' and of `optimize`.
        distances (tuple): Span lengths in km.
        launch_powers (tuple): Launch powers in dBm.
        symbols (int): Symbols per evaluation.
        search_symbols (int): Symbols per objective evaluation during `optimize`.
        seed (int): Run seed.
        metric (str): 'rbmd' or 'mi'.
        workers (int): Concurrent sweep points / polls.
        chase_q (int): Chase-I least-reliable positions, in [0, MAX_CHASE_Q].
        progress (bool): tqdm bars over sweep points and split steps.
        output (Optional[str]): Output path, stdout when None.
        source_text (str): Verbatim config file text, echoed into output
            headers. Not a config key.

    Raises:
        ConfigError: If a field is out of range, naming the field.
    """

    constellation: str = 'pm16qam'
    p_low: float = 0.5
    ps_optimize: bool = False
    gss_m: int = 8
    gss_t: int = 4
    alpha: float = 0.2
    beta2: float = -21.68
    gamma: float = 1.2
    steps_per_span: int = 1000
    symbol_rate: float = 59.84e9
    oversampling: int = 2
    rrc_rolloff: float = 0.05
    fft_workers: int = 1
    tx_osnr_db: Optional[float] = 34.0
    rx_min_input_dbm: float = -20.0
    rx_noise_power_dbm: Optional[float] = -33.5
    enforce_min_power: bool = False
    distances: tuple = (160.0,)
    launch_powers: tuple = (0.0,)
    symbols: int = 2**16
    search_symbols: int = 2**14
    seed: int = 0
    metric: str = 'rbmd'
    workers: int = 1
    chase_q: int = 4
    initial_mesh: float = 0.125
    expansion: float = 2.0
    contraction: float = 0.5
    mesh_tolerance: float = 1e-4
    max_evaluations: int = 1000
    progress: bool = False
    output: Optional[str] = None
    source_text: str = field(default='', repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.distances:
            raise ConfigError('must not be empty', 'distances')
        if not self.launch_powers:
            raise ConfigError('must not be empty', 'launch_powers')
        if any(d <= 0 for d in self.distances):
            raise ConfigError('must be positive', 'distances')
        if self.metric not in METRICS:
            raise ConfigError(f'must be one of {METRICS}', 'metric')
        if self.symbols < 64:
            raise ConfigError('must be at least 64', 'symbols')
        if self.seed < 0:
            raise ConfigError('must be non-negative', 'seed')
        if self.workers < 1:
            raise ConfigError('must be at least 1', 'workers')
        if (
            self.constellation not in BUILTIN_CONSTELLATIONS
            and not Path(self.constellation).is_file()
        ):
            raise ConfigError(
                f'neither a builtin {BUILTIN_CONSTELLATIONS} nor an existing file: '
                f'{self.constellation!r}',
                'constellation',
            )
        if not 0 <= self.chase_q <= MAX_CHASE_Q:
            raise ConfigError(f'must lie in [0, {MAX_CHASE_Q}]', 'chase_q')
        if not 0 < self.p_low < 1:
            raise ConfigError('must lie in the open interval (0, 1)', 'p_low')
        if self.search_symbols < 64:
            raise ConfigError('must be at least 64', 'search_symbols')
        if self.gss_m < 5:
            raise ConfigError('must be at least 5', 'gss_m')
        try:
            validate_shape(self.gss_m, self.gss_t)
        except ConstellationError as err:
            raise ConfigError(str(err), 'gss_t') from err
        # fiber, impairment and search fields fail here rather than mid-sweep
        self.fiber(self.distances[0])
        self.impairments(self.launch_powers[0])
        self.search_options()

    def fiber(self, distance: float) -> FiberConfig:
        """Fiber configuration of one sweep distance."""
        return FiberConfig(
            alpha=self.alpha,
            beta2=self.beta2,
            gamma=self.gamma,
            span_length=distance,
            steps_per_span=self.steps_per_span,
            symbol_rate=self.symbol_rate,
            oversampling=self.oversampling,
            rrc_rolloff=self.rrc_rolloff,
            fft_workers=self.fft_workers,
            progress=self.progress,
        )

    def impairments(self, launch_power_dbm: float) -> ImpairmentConfig:
        """Impairment configuration of one sweep power."""
        return ImpairmentConfig(
            tx_osnr_db=self.tx_osnr_db,
            rx_min_input_dbm=self.rx_min_input_dbm,
            rx_noise_power_dbm=self.rx_noise_power_dbm,
            launch_power_dbm=launch_power_dbm,
            enforce_min_power=self.enforce_min_power,
        )

    def search_options(self) -> SearchOptions:
        return SearchOptions(
            initial_mesh=self.initial_mesh,
            expansion=self.expansion,
            contraction=self.contraction,
            mesh_tolerance=self.mesh_tolerance,
            max_evaluations=self.max_evaluations,
            objective=self.metric,
            seed=self.seed,
            workers=self.workers,
        )

    def load_constellation(self) -> Constellation:
        """
        Resolve the constellation source.

        'gss' is the staggered midpoint of the (gss_m, gss_t) box.

        Raises:
            ParseError: If a constellation file is malformed.
        """
        if self.constellation == 'pm16qam':
            return build_pm16qam()
        if self.constellation == 'pm16qam-ps':
            return build_ps_pm16qam(self.p_low)
        if self.constellation == 'gss':
            return build_gss(midpoint_init(self.gss_m, self.gss_t))
        return load(self.constellation)

    def to_dict(self) -> dict:
        """Plain dict of every config key, for output headers."""
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name in PARSERS}


def _parsers() -> dict[str, Callable[[str], Any]]:
    parsers: dict[str, Callable[[str], Any]] = {}
    for f in fields(RunConfig):
        if f.name == 'source_text':
            continue
        default = f.default
        if f.name in ('distances', 'launch_powers'):
            parsers[f.name] = parse_float_list
        elif f.name in ('tx_osnr_db', 'rx_noise_power_dbm'):
            parsers[f.name] = _parse_optional_float
        elif f.name == 'output':
            parsers[f.name] = lambda text: text.strip() or None
        elif isinstance(default, bool):
            parsers[f.name] = _parse_bool
        elif isinstance(default, int):
            parsers[f.name] = _parse_int
        elif isinstance(default, float):
            parsers[f.name] = float
        else:
            parsers[f.name] = str.strip
    return parsers


PARSERS = _parsers()


def parse_config_text(text: str) -> dict[str, Any]:
    """
    Parse `key = value` lines into typed RunConfig fields.

    Blank lines and text after '#' are ignored.

    Raises:
        ConfigError: On unknown keys, malformed lines or unparsable values,
        naming the key.
    """
    values: dict[str, Any] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise ConfigError(f'line {line_no}: expected key = value, got {raw!r}')
        key, value = (part.strip() for part in line.split('=', 1))
        if key not in PARSERS:
            raise ConfigError(f'unknown key on line {line_no}', key)
        try:
            values[key] = PARSERS[key](value)
        except ValueError as err:
            raise ConfigError(f'line {line_no}: {err}', key) from err
    return values


def load_config(
    path: Optional[Union[str, Path]] = None, overrides: Optional[dict[str, Any]] = None
) -> RunConfig:
    """
    Build a RunConfig from an optional file and command-line overrides.

    Overrides whose value is None are ignored. The file text is kept
    verbatim in `source_text`.

    Raises:
        ConfigError: On unknown keys, bad values or a missing file.
    """
    values: dict[str, Any] = {}
    if path is not None:
        path = Path(path)
        if not path.is_file():
            raise ConfigError(f'config file not found: {path}', 'config')
        text = path.read_text(encoding='utf-8')
        values.update(parse_config_text(text))
        values['source_text'] = text
    for key, value in (overrides or {}).items():
        if value is None:
            continue
        if key not in PARSERS:
            raise ConfigError('unknown key', key)
        values[key] = value
    return RunConfig(**values)
