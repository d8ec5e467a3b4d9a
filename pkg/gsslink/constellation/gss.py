from typing import Optional

import numpy as np

from ..errors import ConstellationError
from ..utils import int_to_bits, logger
from .model import (
    ANGLE_EPS,
    DUPLICATE_TOL,
    RADIUS_EPS,
    Constellation,
    GssParameters,
    validate_shape,
)

__all__ = [
    'build_gss',
    'gss_bounds',
    'gss_first_orthant',
    'orthant_symmetry',
    'xy_symmetry',
]

XY_SWAP = [2, 3, 0, 1]


def _first_duplicate(points: np.ndarray) -> Optional[tuple[int, int]]:
    gaps = np.max(np.abs(points[:, np.newaxis, :] - points[np.newaxis, :, :]), axis=-1)
    np.fill_diagonal(gaps, np.inf)
    if np.min(gaps) >= DUPLICATE_TOL:
        return None
    i, j = np.unravel_index(np.argmin(gaps), gaps.shape)
    return int(min(i, j)), int(max(i, j))


def gss_first_orthant(params: GssParameters) -> tuple[np.ndarray, np.ndarray]:
    """
    Map GSS parameters to the labeled first-orthant points.

    Point j lies on shell s(j) = j // (2^(m-5)/t) and is placed through

        x1 = r cos(theta)
        x2 = r sin(theta) cos(phi)
        x3 = r sin(theta) sin(phi) cos(omega)
        x4 = r sin(theta) sin(phi) sin(omega)

    Its (m-5)-bit inner label holds the p shell bits followed by the
    point-on-shell index, where points of one shell are numbered in order of
    increasing theta (ties keep parameter order).

    Args:
        params (GssParameters): Validated parameters.

    Returns:
        tuple: (points of shape (2^(m-5), 4), labels of shape (2^(m-5), m-5)).
    """
    shell = params.shell_of()
    r = params.radii[shell]
    theta, phi, omega = params.angles.T

    points = np.column_stack(
        [
            r * np.cos(theta),
            r * np.sin(theta) * np.cos(phi),
            r * np.sin(theta) * np.sin(phi) * np.cos(omega),
            r * np.sin(theta) * np.sin(phi) * np.sin(omega),
        ]
    )

    per_shell = params.points_per_shell
    rank = np.empty(params.points_per_orthant, dtype=np.int64)
    for s in range(params.t):
        members = np.arange(s * per_shell, (s + 1) * per_shell)
        order = np.argsort(theta[members], kind='stable')
        rank[members[order]] = np.arange(per_shell)

    on_shell_bits = params.m - 5 - params.shell_bits
    inner = (shell << on_shell_bits) | rank
    return points, int_to_bits(inner, params.m - 5)


def xy_symmetry(
    points: np.ndarray, labels: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """
    Apply the X-Y (polarization swap) symmetry.

    Input point i with label l yields x_i with label [l, 0] at row i and
    (x3, x4, x1, x2) with label [l, 1] at row i + n.

    Args:
        points (np.ndarray): Shape (n, 4), all coordinates strictly positive.
        labels (np.ndarray): Shape (n, k).

    Returns:
        tuple: (points of shape (2n, 4), labels of shape (2n, k + 1)).

    Raises:
        ConstellationError: If a point lies outside the open first orthant or a
            swapped copy coincides with another point (e.g. x1 = x3 and x2 = x4).
    """
    points = np.asarray(points, dtype=float)
    labels = np.asarray(labels, dtype=np.uint8)
    if np.any(points <= 0):
        raise ConstellationError('X-Y symmetry needs points in the open first orthant')

    n = points.shape[0]
    out_points = np.vstack([points, points[:, XY_SWAP]])
    xy_bit = np.repeat(np.array([0, 1], dtype=np.uint8), n)[:, np.newaxis]
    out_labels = np.hstack([np.vstack([labels, labels]), xy_bit])

    duplicate = _first_duplicate(out_points)
    if duplicate is not None:
        raise ConstellationError(
            'X-Y symmetric copy collides: rows {} and {} coincide'.format(*duplicate)
        )
    return out_points, out_labels


def orthant_symmetry(
    points: np.ndarray,
    labels: np.ndarray,
    name: str = 'orthant-symmetric',
    shells: Optional[int] = None,
) -> Constellation:
    """
    Mirror first-orthant points into all 16 orthants.

    Row i + n*(j-1) is x_i H_j with H_j = diag((-1)^l1, ..., (-1)^l4) and
    j - 1 = l1 + 2 l2 + 4 l3 + 8 l4; its label is [l1, l2, l3, l4, label_i].
    The sign bits therefore occupy b1-b4 and orthants that differ in one sign
    differ in exactly one label bit.

    Args:
        points (np.ndarray): Shape (n, 4), coordinates strictly positive.
        labels (np.ndarray): Shape (n, k).
        name (str): Name of the resulting constellation.
        shells (Optional[int]): Shell count recorded on the result.

    Returns:
        Constellation: 16n points, uniform pmf, not power-normalized.

    Raises:
        ConstellationError: If any coordinate is zero or negative.
    """
    points = np.asarray(points, dtype=float)
    labels = np.asarray(labels, dtype=np.uint8)
    if np.any(points <= 0):
        raise ConstellationError(
            'orthant symmetry needs strictly positive coordinates; '
            'zeros would collapse mirrored points'
        )

    n = points.shape[0]
    sign_bits = int_to_bits(np.arange(16), 4)[:, ::-1]  # column k holds l_{k+1}
    all_points = []
    all_labels = []
    for l in sign_bits:
        all_points.append(points * (-1.0) ** l)
        all_labels.append(np.hstack([np.tile(l, (n, 1)), labels]))

    size = 16 * n
    return Constellation(
        np.vstack(all_points),
        np.vstack(all_labels),
        np.full(size, 1 / size),
        name,
        shells,
    )


def build_gss(params: GssParameters, name: Optional[str] = None) -> Constellation:
    """
    Build a unit-power GSS constellation.

    Composition gss_first_orthant -> xy_symmetry -> orthant_symmetry ->
    power normalization. Label layout: b1-b4 orthant, then p shell bits, then
    the point-on-shell bits, and the X-Y selector last.

    Args:
        params (GssParameters): Shell radii and spherical angles.
        name (Optional[str]): Defaults to '4D-<M>-GSS-<t>'.

    Returns:
        Constellation: 2^m points with E[||X||^2] = 1 under the uniform pmf.

    Raises:
        ConstellationError: Propagated from the sub-operations.
    """
    name = name or f'4D-{1 << params.m}-GSS-{params.t}'
    points, labels = gss_first_orthant(params)
    points, labels = xy_symmetry(points, labels)
    constellation = orthant_symmetry(points, labels, name, params.t)
    logger.debug(f'built {name} from {params.to_vector().size} parameters')
    return constellation.normalized()


def gss_bounds(m: int, t: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Box bounds of the flattened GSS parameter vector.

    Args:
        m (int): Bits per 4D symbol.
        t (int): Number of shells.

    Returns:
        tuple: (lower, upper), each of length 3*2^(m-5) + t, laid out as
        [r_1..r_t, theta_1, phi_1, omega_1, ...].
    """
    validate_shape(m, t)
    n_angles = 3 * (1 << (m - 5))
    lower = np.concatenate([np.full(t, RADIUS_EPS), np.full(n_angles, ANGLE_EPS)])
    upper = np.concatenate([np.ones(t), np.full(n_angles, np.pi / 2 - ANGLE_EPS)])
    return lower, upper
