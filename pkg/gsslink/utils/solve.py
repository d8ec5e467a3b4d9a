from typing import Callable

import numpy as np

__all__ = ['bisect_solve', 'find_sign_change_interval']


def find_sign_change_interval(
    f: Callable[[float], float],
    search_range: tuple[float, float],
    step: float = 0.5,
) -> tuple[float, float]:
    """
    Finds an interval [a, b] where f(x) changes sign (i.e., f(a)*f(b) <= 0).

    Args:
        f (Callable): Scalar function.
        search_range (tuple): Search interval (start, end).
        step (float): Grid step.

    Returns:
        tuple: Interval (a, b) where f changes sign.

    Raises:
        ValueError: If the sign doesn't change on any subinterval.
    """
    a, b = float(search_range[0]), float(search_range[1])
    x_vals = np.append(np.arange(a, b, step), b)

    y_prev = f(x_vals[0])
    for x0, x1 in zip(x_vals[:-1], x_vals[1:]):
        y1 = f(x1)
        if y_prev * y1 <= 0:
            return float(x0), float(x1)
        y_prev = y1

    raise ValueError('No interval with a sign change found within the specified range.')


def bisect_solve(
    f: Callable[[float], float],
    a: float,
    b: float,
    eps: float = 1e-8,
    max_iter: int = 200,
) -> tuple[float, int]:
    """
    Bisection method for solving the equation f(x) = 0 on a bracketing interval.

    Args:
        f (Callable): Continuous scalar function.
        a (float): Left end of the bracket.
        b (float): Right end of the bracket.
        eps (float): Width of the final bracket.
        max_iter (int): Maximum number of halvings.

    Returns:
        tuple: (root approximation, number of iterations)

    Raises:
        ValueError: If f(a) and f(b) have the same strict sign.
        RuntimeError: If the bracket does not shrink below eps in max_iter steps.
    """
    a, b = float(a), float(b)
    fa, fb = f(a), f(b)
    if fa == 0:
        return a, 0
    if fb == 0:
        return b, 0
    if fa * fb > 0:
        raise ValueError('f(a) and f(b) must have opposite signs')

    for i in range(1, max_iter + 1):
        mid = 0.5 * (a + b)
        fm = f(mid)
        if fm == 0:
            return mid, i
        if fa * fm < 0:
            b = mid
        else:
            a, fa = mid, fm
        if b - a < eps:
            return 0.5 * (a + b), i

    raise RuntimeError(
        'The bisection method did not converge in the given number of iterations.'
    )
