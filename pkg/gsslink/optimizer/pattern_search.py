from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional

import numpy as np

from ..utils import logger
from .options import SearchOptions, SearchTrace

__all__ = ['pattern_search', 'poll_points']

MAX_MESH = 1.0


def _value(objective: Callable[[np.ndarray], float], x: np.ndarray) -> float:
    f = float(objective(x))
    return -np.inf if np.isnan(f) else f


def poll_points(
    x: np.ndarray, mesh: float, lower: np.ndarray, upper: np.ndarray
) -> list[np.ndarray]:
    """
    Coordinate poll set of the incumbent.

    Directions +e_0, -e_0, +e_1, -e_1, ... with step mesh * (upper - lower),
    projected onto the box. Projections that do not move are dropped.
    """
    width = upper - lower
    points = []
    for i in range(x.size):
        for sign in (1.0, -1.0):
            candidate = x.copy()
            candidate[i] = np.clip(x[i] + sign * mesh * width[i], lower[i], upper[i])
            if candidate[i] != x[i]:
                points.append(candidate)
    return points


def pattern_search(
    objective: Callable[[np.ndarray], float],
    lower: np.ndarray,
    upper: np.ndarray,
    init: np.ndarray,
    opts: Optional[SearchOptions] = None,
) -> tuple[np.ndarray, SearchTrace]:
    """
    Maximize `objective` over a box by generalized pattern search.

    Every iteration polls the full coordinate set of the incumbent (see
    `poll_points`), in a fixed order. The best poll value replaces the
    incumbent only if strictly larger (the first best in poll order wins
    ties), after which the mesh grows by `opts.expansion` up to 1; otherwise
    the mesh shrinks by `opts.contraction`. The search stops when the mesh
    drops below `opts.mesh_tolerance` or the evaluation budget is spent.
    NaN objective values count as -inf.

    With `opts.workers > 1` the polls of one iteration are evaluated
    concurrently; results are consumed in poll order, so the trace does not
    depend on the number of workers.

    Args:
        objective (Callable): Function of the parameter vector to maximize.
        lower (np.ndarray): Finite lower bounds.
        upper (np.ndarray): Finite upper bounds.
        init (np.ndarray): Starting point inside the box.
        opts (SearchOptions, optional): Settings, defaults to `SearchOptions()`.

    Returns:
        tuple: (best point, SearchTrace).

    Raises:
        ValueError: On non-finite or inconsistent bounds or an infeasible start.
    """
    opts = SearchOptions() if opts is None else opts
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    x = np.array(init, dtype=float)

    if not (lower.shape == upper.shape == x.shape) or x.ndim != 1:
        raise ValueError('lower, upper and init must be 1-D of equal length')
    if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
        raise ValueError('bounds must be finite')
    if np.any(lower > upper):
        raise ValueError('lower bounds must not exceed upper bounds')
    if np.any(x < lower) or np.any(x > upper):
        raise ValueError('init must lie within the bounds')

    mesh = opts.initial_mesh
    f = _value(objective, x)
    trace = SearchTrace()
    trace.evaluations = 1
    trace.append(0, x, f, mesh, True)

    executor = ThreadPoolExecutor(opts.workers) if opts.workers > 1 else None
    try:
        iteration = 0
        while mesh >= opts.mesh_tolerance and trace.evaluations < opts.max_evaluations:
            iteration += 1
            polls = poll_points(x, mesh, lower, upper)
            polls = polls[: opts.max_evaluations - trace.evaluations]

            if executor is None:
                values = [_value(objective, p) for p in polls]
            else:
                values = list(executor.map(lambda p: _value(objective, p), polls))
            trace.evaluations += len(polls)

            accepted = False
            if values:
                best = int(np.argmax(values))
                if values[best] > f:
                    x, f = polls[best], values[best]
                    accepted = True

            mesh = min(mesh * opts.expansion, MAX_MESH) if accepted else mesh * opts.contraction
            trace.append(iteration, x, f, mesh, accepted)
            logger.info(
                f'pattern search iteration {iteration}: f={f:.6f}, mesh={mesh:.3g}, '
                f'{"accepted" if accepted else "contracted"}, {trace.evaluations} evaluations'
            )
    finally:
        if executor is not None:
            executor.shutdown()

    return x, trace
