from __future__ import annotations

import logging

import numpy as np
from scipy.interpolate import CubicSpline

from ..path import PathSpec, TimeGrid, derivatives_at
from ..unitary import AlphaGauge, require_unitary_kind
from ..utils import integrate_cumulative

logger = logging.getLogger(__name__)


def parallel_rate(path: PathSpec, t: float) -> float:
    """``alpha_1' = cos(theta) phi' / 2``"""
    _, theta, _ = path.coordinates(t)
    _, _, phi_dot = derivatives_at(path, t)
    return 0.5 * float(np.cos(theta)) * phi_dot


def parallel_alphas(path: PathSpec, grid: TimeGrid) -> AlphaGauge:
    """
    Gauge that nulls the dynamical phase:
    ``alpha_1 = -alpha_2 = 1/2 int cos(theta) phi' dt``.

    Values come from cumulative Simpson quadrature on ``grid`` joined by a cubic
    spline; rates are the exact integrand.
    """
    require_unitary_kind(path)
    points = grid.points
    integrand = np.array([parallel_rate(path, float(t)) for t in points])
    accumulated = integrate_cumulative(integrand, points)
    spline = CubicSpline(points, accumulated)
    logger.debug(
        "parallel gauge on %d nodes, alpha1(tau)=%.12g", len(points), accumulated[-1]
    )

    def alpha1(t: float) -> float:
        return float(spline(t))

    def alpha2(t: float) -> float:
        return -alpha1(t)

    def alpha1_dot(t: float) -> float:
        return parallel_rate(path, t)

    def alpha2_dot(t: float) -> float:
        return -parallel_rate(path, t)

    return AlphaGauge(alpha1, alpha2, alpha1_dot, alpha2_dot, label="parallel")
