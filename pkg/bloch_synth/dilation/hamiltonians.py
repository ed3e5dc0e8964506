from __future__ import annotations

import logging
from math import inf

import numpy as np

from .gauges import WGauge
from .unitaries import dilation_general
from ..base.errors import InvalidFamilyParameter, SingularShrinkStart
from ..base.interfaces import GaugeMatrixSource
from ..core import DEFAULTS, TOLERANCES
from ..linalg import PAULI_X, PAULI_Y, CMat4, generator_from_unitary, kron
from ..path import PathSpec, derivatives_at
from ..path.spec import ScalarFunction
from ..utils import derivative, second_derivative

logger = logging.getLogger(__name__)

# sigma_x (x) sigma_y - sigma_y (x) sigma_x
SHRINK_GENERATOR: CMat4 = kron(PAULI_X, PAULI_Y) - kron(PAULI_Y, PAULI_X)

POLE_GAP = 1e-12
CURVATURE_STEP = 1e-4


def check_pure_start(path: PathSpec) -> None:
    """A pure start must leave the pole with zero speed, else ``r_minus ~ sqrt(t)``"""
    if 1 - path.r0 > TOLERANCES.constant_radius:
        return
    r_dot, _, _ = derivatives_at(path, 0.0)
    if abs(r_dot) > TOLERANCES.singular_rate:
        raise SingularShrinkStart(
            "path starting at r = 1 must have r'(0) = 0",
            data={"r0": path.r0, "r_dot": r_dot},
        )


def default_combined_step(path: PathSpec) -> float:
    return path.tau * DEFAULTS.combined_fd_step_fraction


def h_ab_numeric(
    path: PathSpec,
    w: WGauge,
    v: GaugeMatrixSource,
    t: float,
    h: float | None = None,
    richardson: bool = False,
) -> CMat4:
    """Finite-difference ``i U_ab' U_ab^dagger`` of the gauged dilation, Hermitized"""
    check_pure_start(path)
    path.check_time(t)
    if h is None:
        h = default_combined_step(path)
    sample = generator_from_unitary(
        lambda s: dilation_general(path, w, v, s).u_ab,
        t,
        h,
        0.0,
        path.tau,
        richardson=richardson,
    )
    if sample.skew_defect > TOLERANCES.generator_skew:
        logger.warning(
            "combined generator at t=%.6g had skew defect %.3e", t, sample.skew_defect
        )
    return sample.matrix


def shrink_coefficient(
    r_fn: ScalarFunction,
    t: float,
    r_dot: ScalarFunction | None = None,
    h: float = 1e-6,
    lower: float = 0.0,
    upper: float = inf,
) -> float:
    r = float(r_fn(t))
    if r_dot is None:
        rate = float(derivative(r_fn, t, h, lower, upper))
    else:
        rate = float(r_dot(t))
    gap = 1 - r * r
    if gap > POLE_GAP:
        return rate / (4 * np.sqrt(gap))
    if abs(rate) > TOLERANCES.singular_rate:
        raise SingularShrinkStart(
            "shrink coefficient diverges at r = 1 with r' != 0",
            data={"t": t, "r": r, "r_dot": rate},
        )
    # r' / sqrt(1 - r^2) -> -sqrt(-r'') as the path leaves the pole
    if r_dot is not None:
        curvature = float(derivative(r_dot, t, h, lower, upper))
    else:
        step = max(h, CURVATURE_STEP)
        curvature = float(second_derivative(r_fn, t, step, lower, upper))
    return -np.sqrt(max(0.0, -curvature)) / 4


def shrink_h_ab(
    r_fn: ScalarFunction,
    t: float,
    r_dot: ScalarFunction | None = None,
    h: float = 1e-6,
    lower: float = 0.0,
    upper: float = inf,
) -> CMat4:
    """Closed-form combined Hamiltonian shrinking a polar Bloch vector"""
    return shrink_coefficient(r_fn, t, r_dot, h, lower, upper) * SHRINK_GENERATOR


def shrink_h_ab_for(path: PathSpec, t: float, h: float | None = None) -> CMat4:
    if path.theta0 != 0 or path.family != "shrink":
        raise InvalidFamilyParameter(
            "closed-form shrink Hamiltonian needs a shrink path along the polar axis",
            data={"family": path.family, "theta0": path.theta0},
        )
    check_pure_start(path)
    path.check_time(t)
    r_dot = path.derivatives.r_dot if path.derivatives is not None else None
    return shrink_h_ab(
        path.r, t, r_dot, path.default_step if h is None else h, 0.0, path.tau
    )
