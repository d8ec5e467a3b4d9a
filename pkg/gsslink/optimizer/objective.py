from typing import Callable, Optional, Union

import numpy as np

from ..airmetrics import AirReport
from ..constellation import (
    Constellation,
    GssParameters,
    build_gss,
    build_ps_pm16qam,
    gss_bounds,
)
from ..errors import ConstellationError
from ..fiberlink import FiberConfig, ImpairmentConfig, run_link
from ..utils import logger
from .options import METRICS, SearchOptions, SearchTrace
from .pattern_search import pattern_search

__all__ = [
    'MIDPOINT_STAGGER',
    'PS_BOUNDS',
    'SEARCH_SYMBOLS',
    'FINAL_SYMBOLS',
    'make_gss_objective',
    'metric_value',
    'midpoint_init',
    'objective_for',
    'optimize_gss',
    'optimize_ps',
]

MIDPOINT_STAGGER = 1e-2
SEARCH_SYMBOLS = 2**14
FINAL_SYMBOLS = 2**16
PS_BOUNDS = (1e-3, 1 - 1e-3)


def metric_value(report: AirReport, metric: str) -> float:
    """Pick R_BMD ('rbmd') or MI ('mi') from a report."""
    if metric not in METRICS:
        raise ValueError(f'metric must be one of {METRICS}')
    return report.rbmd if metric == 'rbmd' else report.mi


def objective_for(
    params: Union[GssParameters, Constellation],
    fiber: FiberConfig,
    imp: ImpairmentConfig,
    num_symbols: int,
    seed: int,
    metric: str = 'rbmd',
) -> float:
    """
    Rate of one candidate over the link with common random numbers.

    Every call with the same seed reuses the same symbol-index sequence and
    the same noise draws, so differences between candidates are not sampling
    noise and repeated calls are bit-identical.

    Returns:
        float: R_BMD or MI, -inf if the GSS constellation cannot be built.
    """
    if isinstance(params, GssParameters):
        try:
            c = build_gss(params)
        except ConstellationError as err:
            logger.debug(f'rejected candidate: {err}')
            return -np.inf
    else:
        c = params
    _, report = run_link(c, fiber, imp, num_symbols, seed)
    return metric_value(report, metric)


def make_gss_objective(
    m: int,
    t: int,
    fiber: FiberConfig,
    imp: ImpairmentConfig,
    num_symbols: int,
    seed: int,
    metric: str = 'rbmd',
) -> Callable[[np.ndarray], float]:
    """Objective on the flattened GssParameters vector (see `GssParameters.to_vector`)."""

    def objective(vector: np.ndarray) -> float:
        try:
            params = GssParameters.from_vector(m, t, vector)
        except ConstellationError:
            return -np.inf
        return objective_for(params, fiber, imp, num_symbols, seed, metric)

    return objective


def midpoint_init(m: int, t: int, stagger: float = MIDPOINT_STAGGER) -> GssParameters:
    """
    Halfway point of the GSS box with a per-point angle stagger.

    Every radius is (RADIUS_EPS + 1) / 2 and every angle pi / 4. Because equal
    angles put all points of a shell on top of each other, point j gets
    j * stagger added to its three angles (clipped to the box).

    Args:
        m (int): Bits per 4D symbol.
        t (int): Number of shells.
        stagger (float): Angle offset per point index.

    Returns:
        GssParameters: Valid starting parameters.
    """
    lower, upper = gss_bounds(m, t)
    vector = (lower + upper) / 2
    n = 1 << (m - 5)
    offsets = np.repeat(np.arange(n) * stagger, 3)
    vector[t:] = np.clip(vector[t:] + offsets, lower[t:], upper[t:])
    return GssParameters.from_vector(m, t, vector)


def optimize_gss(
    m: int,
    t: int,
    fiber: FiberConfig,
    imp: ImpairmentConfig,
    opts: Optional[SearchOptions] = None,
    search_symbols: int = SEARCH_SYMBOLS,
    final_symbols: int = FINAL_SYMBOLS,
    init: Optional[GssParameters] = None,
) -> tuple[GssParameters, AirReport, SearchTrace]:
    """
    Optimize a GSS constellation for one link operating point.

    Pattern search from the staggered midpoint (or `init`) at
    `search_symbols`, then a re-evaluation of the incumbent at `final_symbols`
    with the same seed.

    Returns:
        tuple: (best parameters, final AirReport, SearchTrace).
    """
    opts = SearchOptions() if opts is None else opts
    start = midpoint_init(m, t) if init is None else init
    lower, upper = gss_bounds(m, t)
    objective = make_gss_objective(
        m, t, fiber, imp, search_symbols, opts.seed, opts.objective
    )
    logger.info(
        f'optimizing 4D-{1 << m}-GSS-{t}: {lower.size} parameters, '
        f'{opts.max_evaluations} evaluations, D={search_symbols}'
    )
    best, trace = pattern_search(objective, lower, upper, start.to_vector(), opts)
    params = GssParameters.from_vector(m, t, best)
    _, report = run_link(build_gss(params), fiber, imp, final_symbols, opts.seed)
    return params, report, trace


def optimize_ps(
    fiber: FiberConfig,
    imp: ImpairmentConfig,
    opts: Optional[SearchOptions] = None,
    search_symbols: int = SEARCH_SYMBOLS,
    final_symbols: int = FINAL_SYMBOLS,
) -> tuple[float, AirReport, SearchTrace]:
    """
    Optimize the inner-amplitude probability of PS-PM-16QAM.

    One-dimensional pattern search over p_low in PS_BOUNDS, started at the
    uniform distribution p_low = 0.5.

    Returns:
        tuple: (p_low*, final AirReport at `final_symbols`, SearchTrace).
    """
    opts = SearchOptions() if opts is None else opts

    def objective(vector: np.ndarray) -> float:
        c = build_ps_pm16qam(float(vector[0]))
        return objective_for(c, fiber, imp, search_symbols, opts.seed, opts.objective)

    best, trace = pattern_search(
        objective, np.array([PS_BOUNDS[0]]), np.array([PS_BOUNDS[1]]), np.array([0.5]), opts
    )
    p_low = float(best[0])
    _, report = run_link(build_ps_pm16qam(p_low), fiber, imp, final_symbols, opts.seed)
    logger.info(f'PS-PM-16QAM optimum p_low={p_low:.4f}, rbmd={report.rbmd:.4f}')
    return p_low, report, trace
