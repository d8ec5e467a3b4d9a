from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from ..errors import ConfigError

__all__ = ['METRICS', 'SearchOptions', 'SearchTrace', 'TraceEntry']

METRICS = ('rbmd', 'mi')


@dataclass(frozen=True)
class SearchOptions:
    """
    Pattern-search settings.

    Attributes:
        initial_mesh (float): Initial poll step as a fraction of each box width.
        expansion (float): Mesh factor after a successful iteration (> 1).
        contraction (float): Mesh factor after a failed iteration (in (0, 1)).
        mesh_tolerance (float): Stop once the mesh falls below this.
        max_evaluations (int): Objective evaluation budget, initial point included.
        objective (str): 'rbmd' or 'mi'.
        seed (int): Common-random-number seed of every evaluation.
        workers (int): Threads evaluating the polls of one iteration.

    Raises:
        ConfigError: If a field is out of range.
    """

    initial_mesh: float = 0.125
    expansion: float = 2.0
    contraction: float = 0.5
    mesh_tolerance: float = 1e-4
    max_evaluations: int = 1000
    objective: Literal['rbmd', 'mi'] = 'rbmd'
    seed: int = 0
    workers: int = 1

    def __post_init__(self) -> None:
        if not 0 < self.contraction < 1:
            raise ConfigError('must lie in (0, 1)', 'contraction')
        if not self.expansion > 1:
            raise ConfigError('must exceed 1', 'expansion')
        if not self.mesh_tolerance > 0:
            raise ConfigError('must be positive', 'mesh_tolerance')
        if not 0 < self.initial_mesh <= 1:
            raise ConfigError('must lie in (0, 1]', 'initial_mesh')
        if self.max_evaluations < 1:
            raise ConfigError('must be at least 1', 'max_evaluations')
        if self.objective not in METRICS:
            raise ConfigError(f'must be one of {METRICS}', 'objective')
        if self.seed < 0:
            raise ConfigError('must be non-negative', 'seed')
        if self.workers < 1:
            raise ConfigError('must be at least 1', 'workers')


@dataclass(frozen=True, eq=False)
class TraceEntry:
    """Incumbent after one iteration (iteration 0 is the initial point)."""

    iteration: int
    x: np.ndarray
    f: float
    mesh: float
    accepted: bool


@dataclass
class SearchTrace:
    """Ordered record of a pattern search run."""

    entries: list[TraceEntry] = field(default_factory=list)
    evaluations: int = 0

    def append(
        self, iteration: int, x: np.ndarray, f: float, mesh: float, accepted: bool
    ) -> None:
        entry = TraceEntry(
            iteration, np.array(x, dtype=float), float(f), float(mesh), bool(accepted)
        )
        self.entries.append(entry)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def best(self) -> TraceEntry:
        return self.entries[-1]

    def accepted_values(self) -> np.ndarray:
        """Objective values of the accepted entries, in order."""
        return np.array([e.f for e in self.entries if e.accepted])

    def columns(self) -> list[str]:
        width = self.entries[0].x.size if self.entries else 0
        return ['iteration', 'objective', 'mesh', 'accepted'] + [f'p{i}' for i in range(width)]

    def rows(self) -> list[list]:
        """One row per entry matching `columns()`."""
        return [
            [e.iteration, e.f, e.mesh, int(e.accepted)] + e.x.tolist() for e in self.entries
        ]
