from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from ..errors import ConstellationError
from ..utils import bits_to_int

__all__ = [
    'ANGLE_EPS',
    'DUPLICATE_TOL',
    'RADIUS_EPS',
    'Constellation',
    'GssParameters',
    'validate_shape',
]

# strict interior of the first orthant
ANGLE_EPS = 1e-3
RADIUS_EPS = 1e-3
DUPLICATE_TOL = 1e-9
PMF_TOL = 1e-12


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, copy=True)
    array.setflags(write=False)
    return array


def _is_power_of_two(value: int) -> bool:
    return value >= 1 and (value & (value - 1)) == 0


@dataclass(frozen=True, eq=False)
class Constellation:
    """
    An M-point 4D constellation with a fixed binary labeling and a symbol PMF.

    Row j of `points` is the 4D symbol (x1, x2, x3, x4) whose x- and
    y-polarization fields are x1 + j*x2 and x3 + j*x4. Row j of `labels` is its
    m-bit label b1 ... bm. All arrays are read-only after construction.

    Attributes:
        points (np.ndarray): Float array of shape (M, 4).
        labels (np.ndarray): uint8 array of shape (M, m).
        pmf (np.ndarray): Symbol probabilities, shape (M,).
        name (str): Identifier.
        shells (Optional[int]): Number of GSS shells, None for non-GSS formats.

    Raises:
        ConstellationError: If any structural invariant is violated.
    """

    points: np.ndarray
    labels: np.ndarray
    pmf: np.ndarray
    name: str = 'constellation'
    shells: Optional[int] = None

    def __post_init__(self) -> None:
        points = np.asarray(self.points, dtype=float)
        labels = np.asarray(self.labels, dtype=np.uint8)
        pmf = np.asarray(self.pmf, dtype=float)

        if points.ndim != 2 or points.shape[1] != 4:
            raise ConstellationError('points must have shape (M, 4)')
        size = points.shape[0]
        if labels.ndim != 2 or labels.shape[0] != size:
            raise ConstellationError('labels must have one row per point')
        if size != 1 << labels.shape[1]:
            raise ConstellationError(
                f'M = {size} points does not equal 2**m with m = {labels.shape[1]}'
            )
        if pmf.shape != (size,):
            raise ConstellationError('pmf must have one entry per point')
        if not np.all(np.isfinite(points)):
            raise ConstellationError('points must be finite')
        if np.any((labels != 0) & (labels != 1)):
            raise ConstellationError('labels must be binary')
        if np.unique(bits_to_int(labels)).size != size:
            raise ConstellationError('labels must be distinct')
        if np.any(pmf < 0) or abs(pmf.sum() - 1) > PMF_TOL:
            raise ConstellationError('pmf must be non-negative and sum to 1')

        gaps = np.max(np.abs(points[:, np.newaxis, :] - points[np.newaxis, :, :]), axis=-1)
        np.fill_diagonal(gaps, np.inf)
        if np.min(gaps) < DUPLICATE_TOL:
            i, j = np.unravel_index(np.argmin(gaps), gaps.shape)
            raise ConstellationError(f'points {i} and {j} coincide')

        object.__setattr__(self, 'points', _frozen(points))
        object.__setattr__(self, 'labels', _frozen(labels))
        object.__setattr__(self, 'pmf', _frozen(pmf))

    @property
    def m(self) -> int:
        """Bits per 4D symbol."""
        return self.labels.shape[1]

    @property
    def size(self) -> int:
        """Number of points M."""
        return self.points.shape[0]

    @property
    def label_ints(self) -> np.ndarray:
        """Labels as integers, b1 most significant."""
        return bits_to_int(self.labels)

    @property
    def energies(self) -> np.ndarray:
        """Squared norms of the points."""
        return np.sum(self.points**2, axis=1)

    def mean_power(self) -> float:
        """E[||X||^2] under the pmf."""
        return float(self.pmf @ self.energies)

    def is_uniform(self) -> bool:
        """True if every point has probability 1/M."""
        return bool(np.allclose(self.pmf, 1 / self.size, rtol=0, atol=PMF_TOL))

    def entropy(self) -> float:
        """Symbol entropy H(X) in bits."""
        p = self.pmf[self.pmf > 0]
        return float(-np.sum(p * np.log2(p)))

    def normalized(self, power: float = 1.0) -> 'Constellation':
        """
        Return a copy scaled so that E[||X||^2] equals `power`.

        Args:
            power (float): Target mean 4D symbol energy.

        Returns:
            Constellation: Scaled copy with identical labels and pmf.
        """
        scale = np.sqrt(power / self.mean_power())
        return Constellation(
            self.points * scale, self.labels, self.pmf, self.name, self.shells
        )

    def with_pmf(self, pmf: np.ndarray, name: Optional[str] = None) -> 'Constellation':
        """Return a copy with another pmf (not re-normalized)."""
        return Constellation(
            self.points, self.labels, pmf, name or self.name, self.shells
        )


@dataclass(frozen=True, eq=False)
class GssParameters:
    """
    Free parameters of a GSS constellation.

    The 2^(m-5) first-orthant points are grouped by shell: points
    [s * n/t, (s + 1) * n/t) sit on shell s with radius radii[s], where
    n = 2^(m-5). Each point carries spherical angles (theta, phi, omega).

    Attributes:
        m (int): Bits per 4D symbol (m >= 5).
        t (int): Number of shells, a power of two not above 2^(m-5).
        radii (np.ndarray): Shape (t,), each in [RADIUS_EPS, 1].
        angles (np.ndarray): Shape (2^(m-5), 3), each in [ANGLE_EPS, pi/2 - ANGLE_EPS].

    Raises:
        ConstellationError: If any bound or size is violated.
    """

    m: int
    t: int
    radii: np.ndarray
    angles: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        validate_shape(self.m, self.t)
        object.__setattr__(self, 'm', int(self.m))
        object.__setattr__(self, 't', int(self.t))
        radii = np.asarray(self.radii, dtype=float)
        angles = np.asarray(self.angles, dtype=float)

        if radii.shape != (self.t,):
            raise ConstellationError(f'expected {self.t} radii, got shape {radii.shape}')
        if angles.shape != (self.points_per_orthant, 3):
            raise ConstellationError(
                f'expected angles of shape ({self.points_per_orthant}, 3), '
                f'got {angles.shape}'
            )
        if np.any(radii < RADIUS_EPS) or np.any(radii > 1):
            raise ConstellationError(f'radii must lie in [{RADIUS_EPS}, 1]')
        if np.any(angles < ANGLE_EPS) or np.any(angles > np.pi / 2 - ANGLE_EPS):
            raise ConstellationError(
                f'angles must lie in [{ANGLE_EPS}, pi/2 - {ANGLE_EPS}]'
            )

        object.__setattr__(self, 'radii', _frozen(radii))
        object.__setattr__(self, 'angles', _frozen(angles))

    @property
    def points_per_orthant(self) -> int:
        """Number of free first-orthant points 2^(m-5)."""
        return 1 << (self.m - 5)

    @property
    def shell_bits(self) -> int:
        """p = log2(t)."""
        return self.t.bit_length() - 1

    @property
    def points_per_shell(self) -> int:
        return self.points_per_orthant // self.t

    def shell_of(self) -> np.ndarray:
        """Shell index of each first-orthant point."""
        return np.arange(self.points_per_orthant) // self.points_per_shell

    def to_vector(self) -> np.ndarray:
        """Flatten as [r_1..r_t, theta_1, phi_1, omega_1, theta_2, ...]."""
        return np.concatenate([self.radii, self.angles.ravel()])

    @classmethod
    def from_vector(
        cls, m: int, t: int, vector: Union[list, np.ndarray]
    ) -> 'GssParameters':
        """
        Inverse of `to_vector`.

        Raises:
            ConstellationError: If the vector length is not 3*2^(m-5) + t.
        """
        validate_shape(m, t)
        vector = np.asarray(vector, dtype=float)
        n = 1 << (m - 5)
        if vector.shape != (3 * n + t,):
            raise ConstellationError(
                f'expected a vector of length {3 * n + t}, got {vector.shape}'
            )
        return cls(m, t, vector[:t], vector[t:].reshape(n, 3))


def validate_shape(m: int, t: int) -> None:
    """
    Check an (m, t) pair.

    Raises:
        ConstellationError: If m < 5, t is not a power of two or t > 2^(m-5).
    """
    if int(m) != m or m < 5:
        raise ConstellationError('m must be an integer >= 5')
    if int(t) != t or not _is_power_of_two(int(t)):
        raise ConstellationError('t must be a power of two')
    if t > 1 << (m - 5):
        raise ConstellationError(f't = {t} exceeds 2**(m-5) = {1 << (m - 5)}')
