import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from pathlib import Path

from tqdm.auto import tqdm

from ..airmetrics import AirReport
from ..constellation import (
    Constellation,
    GssParameters,
    build_gss,
    build_ps_pm16qam,
    dof_count,
    papr,
    polarization_powers,
    save,
    serialize,
    shell_count,
    unconstrained_dof,
)
from ..errors import ConfigError
from ..fec import SCC_FEC_LIMIT, postfec_ber
from ..fiberlink import run_link
from ..optimizer import SearchTrace, optimize_gss, optimize_ps
from ..utils import logger
from .analysis import (
    mark_pushed,
    missing_points,
    operating_rows,
    pass_distance,
    reach_gain,
    required_powers,
)
from .config import RunConfig
from .output import SweepRow, rows_from_csv, sweep_columns, write_csv

__all__ = [
    'cmd_evaluate',
    'cmd_export',
    'cmd_fec_ber',
    'cmd_optimize',
    'cmd_reach',
    'evaluate_point',
    'export_summary',
    'run_sweep',
]


def evaluate_point(
    cfg: RunConfig, c: Constellation, distance: float, power: float, fec: bool = False
) -> SweepRow:
    """Run the link at one (distance, launch power) point and fill a SweepRow."""
    fiber = cfg.fiber(distance)
    imp = cfg.impairments(power)
    p_low = float('nan')

    if cfg.ps_optimize and cfg.constellation == 'pm16qam-ps':
        opts = replace(cfg.search_options(), workers=1)
        p_low, report, _ = optimize_ps(fiber, imp, opts, cfg.search_symbols, cfg.symbols)
        c = build_ps_pm16qam(p_low)
    else:
        _, report = run_link(c, fiber, imp, cfg.symbols, cfg.seed)
        if cfg.constellation == 'pm16qam-ps':
            p_low = cfg.p_low

    row = SweepRow(
        distance_km=distance,
        launch_power_dbm=power,
        mi=report.mi,
        rbmd=report.rbmd,
        bitwise_mi=report.bitwise_mi,
        papr=papr(c),
        sigma2=report.sigma2,
        pre_fec_ber=report.pre_fec_ber,
        mi_stderr=report.mi_stderr,
        rbmd_stderr=report.rbmd_stderr,
        p_low=p_low,
    )
    if fec:
        _fill_fec(row, report, cfg)
    return row


def _fill_fec(row: SweepRow, report: AirReport, cfg: RunConfig) -> None:
    hd = postfec_ber(report.frame, 'hd', cfg.seed)
    sd = postfec_ber(report.frame, 'sd', cfg.seed, q=cfg.chase_q)
    row.post_fec_ber_hd = hd.post_fec_ber
    row.post_fec_ber_sd = sd.post_fec_ber
    row.fec_pass_hd = hd.passed
    row.fec_pass_sd = sd.passed
    row.low_confidence = hd.low_confidence or sd.low_confidence


def run_sweep(cfg: RunConfig, fec: bool = False) -> list[SweepRow]:
    """
    Evaluate every (distance, launch power) grid point.

    Points run concurrently on `cfg.workers` threads; rows come back in grid
    order (distances outer, powers inner) whatever the completion order. The
    received-power rule is applied afterwards: a distance whose grid optimum
    lies below `min_launch_power` gets a row at exactly that power (evaluated
    and appended after its grid rows when the grid lacks it), flagged
    `pushed_above_optimal`.
    """
    c = cfg.load_constellation()
    grid = [(d, p) for d in cfg.distances for p in cfg.launch_powers]
    logger.info(f'sweeping {c.name} over {len(grid)} points with {cfg.workers} workers')

    def task(point: tuple[float, float]) -> SweepRow:
        return evaluate_point(cfg, c, point[0], point[1], fec)

    def evaluate_all(points: list[tuple[float, float]]) -> list[SweepRow]:
        with ThreadPoolExecutor(cfg.workers) as executor:
            return list(
                tqdm(
                    executor.map(task, points),
                    total=len(points),
                    disable=not cfg.progress,
                    desc='sweep',
                )
            )

    rows = evaluate_all(grid)
    floors = required_powers(rows, cfg.metric, cfg.rx_min_input_dbm, cfg.alpha)
    extra = missing_points(rows, floors)
    if extra:
        logger.info(f'evaluating {len(extra)} minimum-launch-power points off the grid')
        added = {point[0]: row for point, row in zip(extra, evaluate_all(extra))}
        ordered = []
        for distance in dict.fromkeys(cfg.distances):
            ordered.extend(r for r in rows if r.distance_km == distance)
            if distance in added:
                ordered.append(added.pop(distance))
        rows = ordered

    for row in mark_pushed(rows, floors):
        logger.info(
            f'{row.distance_km:g} km: launch power pushed above optimum to '
            f'{row.launch_power_dbm:g} dBm'
        )
    return rows


def _write_rows(cfg: RunConfig, command: str, rows: list[SweepRow]) -> None:
    m = rows[0].bitwise_mi.size
    write_csv(
        cfg.output,
        command,
        cfg.to_dict(),
        sweep_columns(m),
        [r.values() for r in rows],
        cfg.source_text,
    )


def cmd_evaluate(cfg: RunConfig) -> list[SweepRow]:
    """Rates over the distance x launch power grid, written as CSV."""
    rows = run_sweep(cfg, fec=False)
    _write_rows(cfg, 'evaluate', rows)
    return rows


def cmd_fec_ber(cfg: RunConfig) -> list[SweepRow]:
    """
    Rates plus HD and Chase-I post-FEC BER over the grid, written as CSV.

    The HD and SD pass distances at the operating launch power are logged.
    """
    rows = run_sweep(cfg, fec=True)
    _write_rows(cfg, 'fec-ber', rows)
    operating = operating_rows(rows, cfg.metric)
    for column in ('post_fec_ber_hd', 'post_fec_ber_sd'):
        reach = pass_distance(operating, column, SCC_FEC_LIMIT)
        logger.info(
            f'{column} pass distance: '
            + ('none' if reach is None else f'{reach:g} km')
        )
    return rows


def cmd_optimize(cfg: RunConfig) -> tuple[GssParameters, AirReport, SearchTrace]:
    """
    Optimize a (gss_m, gss_t) GSS constellation at the first grid point.

    Writes the best constellation to `cfg.output` in the text format and the
    search trace to `<output>.trace.csv`.

    Raises:
        ConfigError: If no output path is configured.
    """
    if cfg.output is None:
        raise ConfigError('required for optimize', 'output')
    distance, power = cfg.distances[0], cfg.launch_powers[0]
    if len(cfg.distances) > 1 or len(cfg.launch_powers) > 1:
        logger.warning(f'optimize uses the first grid point only: {distance:g} km, {power:g} dBm')

    params, report, trace = optimize_gss(
        cfg.gss_m,
        cfg.gss_t,
        cfg.fiber(distance),
        cfg.impairments(power),
        cfg.search_options(),
        cfg.search_symbols,
        cfg.symbols,
    )
    save(build_gss(params), cfg.output)
    write_csv(
        f'{cfg.output}.trace.csv',
        'optimize',
        cfg.to_dict(),
        trace.columns(),
        trace.rows(),
        cfg.source_text,
    )
    logger.info(
        f'optimized after {trace.evaluations} evaluations: '
        f'rbmd={report.rbmd:.4f}, mi={report.mi:.4f} at D={cfg.symbols}'
    )
    return params, report, trace


def export_summary(c: Constellation) -> dict:
    """PAPR, DOF, shells and per-polarization power of a constellation."""
    power_x, power_y = polarization_powers(c)
    return {
        'name': c.name,
        'm': c.m,
        'size': c.size,
        'papr': papr(c),
        'dof': dof_count(c.m, c.shells) if c.shells else None,
        'unconstrained_dof': unconstrained_dof(c.m),
        'shells': c.shells,
        'energy_levels': shell_count(c),
        'mean_power': c.mean_power(),
        'power_x': power_x,
        'power_y': power_y,
        'entropy': c.entropy(),
    }


def cmd_export(cfg: RunConfig) -> dict:
    """
    Write the configured constellation in the text format plus a JSON summary.

    With an output path the summary goes to `<output>.json`; otherwise the
    text goes to stdout and the summary to stderr.
    """
    c = cfg.load_constellation()
    summary = export_summary(c)
    if cfg.output is None:
        sys.stdout.write(serialize(c))
        sys.stderr.write(json.dumps(summary, indent=2) + '\n')
    else:
        save(c, cfg.output)
        summary_path = Path(f'{cfg.output}.json')
        summary_path.write_text(json.dumps(summary, indent=2) + '\n', encoding='utf-8')
    return summary


def cmd_reach(
    path_a: str,
    path_b: str,
    column: str = 'post_fec_ber_sd',
    limit: float = SCC_FEC_LIMIT,
    metric: str = 'rbmd',
) -> dict:
    """
    Compare the reach of two sweep CSVs (e.g. GSS against PM-16QAM).

    Each sweep is reduced to its operating rows (pushed row or grid optimum
    per distance) before the pass distances are taken. The summary goes to
    stdout as JSON.

    Returns:
        dict: Pass distances of A and B and the gain of A over B in percent,
        None where a sweep never passes.

    Raises:
        ConfigError: If a file is missing, malformed or lacks `column`.
    """
    sweeps = []
    for name, path in (('a', path_a), ('b', path_b)):
        if not Path(path).is_file():
            raise ConfigError(f'sweep file not found: {path}', name)
        try:
            _, rows = rows_from_csv(path)
        except ValueError as err:
            raise ConfigError(str(err), name) from err
        if not rows:
            raise ConfigError(f'no rows in {path}', name)
        if not hasattr(rows[0], column):
            raise ConfigError(f'unknown column {column!r}', 'column')
        sweeps.append(operating_rows(rows, metric))

    rows_a, rows_b = sweeps
    summary = {
        'column': column,
        'limit': limit,
        'reach_a': pass_distance(rows_a, column, limit),
        'reach_b': pass_distance(rows_b, column, limit),
        'gain_percent': None,
    }
    if summary['reach_b'] is None:
        logger.warning(f'{path_b} never meets {column} <= {limit:g}')
    else:
        summary['gain_percent'] = reach_gain(rows_a, rows_b, column, limit)
    sys.stdout.write(json.dumps(summary, indent=2) + '\n')
    return summary
