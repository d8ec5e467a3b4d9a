import numpy as np

from .model import Constellation, validate_shape

__all__ = [
    'dof_count',
    'papr',
    'polarization_powers',
    'shell_count',
    'unconstrained_dof',
]


def papr(c: Constellation) -> float:
    """
    Peak-to-average power ratio over 4D symbols.

    Args:
        c (Constellation): Any constellation.

    Returns:
        float: max_j ||x_j||^2 / sum_j P(x_j) ||x_j||^2, at least 1.
    """
    return float(np.max(c.energies) / c.mean_power())


def dof_count(m: int, t: int) -> int:
    """
    Degrees of freedom of a GSS constellation: 3 * 2^(m-5) + t.

    Raises:
        ConstellationError: If (m, t) is not a valid GSS shape.
    """
    validate_shape(m, t)
    return 3 * (1 << (m - 5)) + t


def unconstrained_dof(m: int) -> int:
    """Degrees of freedom of an unconstrained 2^m-point 4D constellation."""
    return 4 * (1 << m)


def shell_count(c: Constellation, tol: float = 1e-9) -> int:
    """
    Number of distinct 4D energy levels (shells).

    Args:
        c (Constellation): Any constellation.
        tol (float): Relative tolerance for grouping energies.

    Returns:
        int: Count of distinct ||x||^2 values.
    """
    energies = np.sort(c.energies)
    gaps = np.diff(energies) > tol * energies[-1]
    return int(1 + np.count_nonzero(gaps))


def polarization_powers(c: Constellation) -> tuple[float, float]:
    """
    Mean power per polarization under the pmf.

    Returns:
        tuple: (E[x1^2 + x2^2], E[x3^2 + x4^2]).
    """
    squares = c.points**2
    p_x = float(c.pmf @ (squares[:, 0] + squares[:, 1]))
    p_y = float(c.pmf @ (squares[:, 2] + squares[:, 3]))
    return p_x, p_y
