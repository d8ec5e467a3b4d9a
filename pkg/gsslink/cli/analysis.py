from typing import Optional

import numpy as np

from ..fiberlink import min_launch_power
from .output import SweepRow

__all__ = [
    'POWER_TOL',
    'mark_pushed',
    'missing_points',
    'operating_rows',
    'optimal_rows',
    'pass_distance',
    'reach_gain',
    'required_powers',
]

# dBm
POWER_TOL = 1e-9


def _by_distance(rows: list[SweepRow]) -> dict[float, list[SweepRow]]:
    groups: dict[float, list[SweepRow]] = {}
    for row in rows:
        groups.setdefault(row.distance_km, []).append(row)
    return dict(sorted(groups.items()))


def optimal_rows(rows: list[SweepRow], metric: str = 'rbmd') -> list[SweepRow]:
    """
    Per distance, the row at the grid-optimal launch power.

    The optimum is the argmax of `metric` over the launch-power grid; the
    first row in grid order wins ties. Rows come back sorted by distance.
    """
    best = []
    for group in _by_distance(rows).values():
        values = [getattr(r, metric) for r in group]
        best.append(group[int(np.argmax(values))])
    return best


def required_powers(
    rows: list[SweepRow],
    metric: str = 'rbmd',
    rx_min_input_dbm: float = -20.0,
    alpha: float = 0.2,
) -> dict[float, float]:
    """
    Distances whose grid-optimal launch power misses the receiver minimum.

    Pass the grid rows only: the optimum is taken over the user grid.

    Returns:
        dict: distance -> `min_launch_power(distance)`, for every distance
        whose optimum lies below it.
    """
    floors = {}
    for distance, group in _by_distance(rows).items():
        floor = min_launch_power(distance, rx_min_input_dbm, alpha)
        if optimal_rows(group, metric)[0].launch_power_dbm < floor - POWER_TOL:
            floors[distance] = floor
    return floors


def missing_points(rows: list[SweepRow], floors: dict[float, float]) -> list[tuple[float, float]]:
    """(distance, power) pairs of `floors` with no row at exactly that power."""
    have = {(r.distance_km, r.launch_power_dbm) for r in rows}
    return [
        (distance, power)
        for distance, power in floors.items()
        if not any(d == distance and abs(p - power) <= POWER_TOL for d, p in have)
    ]


def mark_pushed(rows: list[SweepRow], floors: dict[float, float]) -> list[SweepRow]:
    """
    Apply the received-power rule to a sweep.

    The row at `floors[distance]` of every listed distance gets
    `pushed_above_optimal = True`. Rows for powers off the grid are added
    first with `missing_points`.

    Returns:
        list: The flagged rows.
    """
    pushed = []
    for row in rows:
        floor = floors.get(row.distance_km)
        if floor is not None and abs(row.launch_power_dbm - floor) <= POWER_TOL:
            row.pushed_above_optimal = True
            pushed.append(row)
    return pushed


def operating_rows(rows: list[SweepRow], metric: str = 'rbmd') -> list[SweepRow]:
    """Per distance, the pushed row if one is flagged, else the optimal row."""
    out = []
    for group in _by_distance(rows).values():
        flagged = [r for r in group if r.pushed_above_optimal]
        out.append(flagged[0] if flagged else optimal_rows(group, metric)[0])
    return out


def pass_distance(rows: list[SweepRow], column: str, limit: float) -> Optional[float]:
    """
    Largest distance whose row meets `column <= limit`.

    Typical limits are the SCC-FEC limit 4.5e-3 on post-FEC BER or 1e-5 for a
    Hamming-only link. Pass one row per distance (e.g. `operating_rows`).

    Returns:
        Optional[float]: Distance in km, or None if no row passes.
    """
    passing = [r.distance_km for r in rows if getattr(r, column) <= limit]
    return max(passing) if passing else None


def reach_gain(
    rows_a: list[SweepRow], rows_b: list[SweepRow], column: str, limit: float
) -> float:
    """
    Relative reach gain of A over B in percent.

    Raises:
        ValueError: If B has no passing distance.
    """
    reach_a = pass_distance(rows_a, column, limit)
    reach_b = pass_distance(rows_b, column, limit)
    if reach_b is None:
        raise ValueError('reference sweep has no passing distance')
    return 100.0 * ((reach_a or 0.0) / reach_b - 1.0)
