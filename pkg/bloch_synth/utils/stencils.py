from __future__ import annotations

from collections.abc import Callable
from math import inf
from typing import TypeVar

import numpy as np

T = TypeVar("T", float, complex, np.ndarray)


def derivative(
    function: Callable[[float], T],
    t: float,
    h: float,
    lower: float = -inf,
    upper: float = inf,
) -> T:
    """
    Second-order finite difference of a scalar- or matrix-valued function.

    Central near the interior, one-sided three-point stencils where ``t - h``
    or ``t + h`` would leave ``[lower, upper]``.
    """
    if h <= 0:
        raise ValueError(f"finite-difference step must be positive, got {h}")
    if t - h < lower:
        return (-3 * function(t) + 4 * function(t + h) - function(t + 2 * h)) / (2 * h)
    if t + h > upper:
        return (3 * function(t) - 4 * function(t - h) + function(t - 2 * h)) / (2 * h)
    return (function(t + h) - function(t - h)) / (2 * h)


def second_derivative(
    function: Callable[[float], T],
    t: float,
    h: float,
    lower: float = -inf,
    upper: float = inf,
) -> T:
    if t - h < lower:
        return (
            2 * function(t)
            - 5 * function(t + h)
            + 4 * function(t + 2 * h)
            - function(t + 3 * h)
        ) / h**2
    if t + h > upper:
        return (
            2 * function(t)
            - 5 * function(t - h)
            + 4 * function(t - 2 * h)
            - function(t - 3 * h)
        ) / h**2
    return (function(t + h) - 2 * function(t) + function(t - h)) / h**2


def richardson_derivative(
    function: Callable[[float], T],
    t: float,
    h: float,
    lower: float = -inf,
    upper: float = inf,
) -> T:
    coarse = derivative(function, t, h, lower, upper)
    fine = derivative(function, t, h / 2, lower, upper)
    return (4 * fine - coarse) / 3
