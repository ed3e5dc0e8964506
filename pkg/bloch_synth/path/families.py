from __future__ import annotations

from collections.abc import Callable

import numpy as np
import numpy.typing as npt
from scipy.interpolate import CubicSpline

from .spec import PathDerivatives, PathKind, PathSpec, ScalarFunction
from ..base.errors import InvalidFamilyParameter
from ..core import TOLERANCES


def _constant(value: float) -> ScalarFunction:
    return lambda _: value


def _require(condition: bool, message: str, **data: float) -> None:
    if not condition:
        raise InvalidFamilyParameter(message, data=data)


def family_circle(
    r0: float,
    theta0: float,
    omega: float,
    tau: float | None = None,
    phi0: float = 0.0,
) -> PathSpec:
    """Constant-latitude loop ``theta = theta0``, ``phi = phi0 + omega t``"""
    _require(0 <= r0 <= 1, "circle radius must lie in [0, 1]", r0=r0)
    _require(0 <= theta0 <= np.pi, "circle latitude must lie in [0, pi]", theta0=theta0)
    _require(bool(np.isfinite(omega)), "angular velocity must be finite", omega=omega)
    if tau is None:
        _require(omega != 0, "a static circle needs an explicit tau", omega=omega)
        tau = 2 * np.pi / abs(omega)
    return PathSpec(
        r=_constant(r0),
        theta=_constant(theta0),
        phi=lambda t: phi0 + omega * t,
        tau=tau,
        derivatives=PathDerivatives(_constant(0.0), _constant(0.0), _constant(omega)),
        kind=PathKind.UNITARY,
        family="circle",
        params={"r0": r0, "theta0": theta0, "omega": omega, "phi0": phi0},
    )


def family_ellipse(omega: float, tau: float | None = None) -> PathSpec:
    """Equatorial ellipse ``r_x^2 + 4 r_y^2 = 1`` starting on the sphere at ``+x``"""
    positive = bool(np.isfinite(omega)) and omega > 0
    _require(positive, "omega must be positive", omega=omega)
    if tau is None:
        tau = np.pi / omega

    def radius(t: float) -> float:
        return float((np.cos(omega * t) ** 2 + 4 * np.sin(omega * t) ** 2) ** -0.5)

    def radius_dot(t: float) -> float:
        # d/dt (1 + 3 sin^2)^(-1/2)
        return float(-1.5 * omega * np.sin(2 * omega * t) * radius(t) ** 3)

    return PathSpec(
        r=radius,
        theta=_constant(np.pi / 2),
        phi=lambda t: omega * t,
        tau=tau,
        derivatives=PathDerivatives(radius_dot, _constant(0.0), _constant(omega)),
        kind=PathKind.OPEN,
        family="ellipse",
        params={"omega": omega},
    )


def family_shrink(
    r_fn: ScalarFunction,
    tau: float,
    r_dot: ScalarFunction | None = None,
    theta0: float = 0.0,
) -> PathSpec:
    """Bloch vector shrinking along a fixed axis (the polar axis by default)"""
    _require(0 <= theta0 <= np.pi, "shrink axis must lie in [0, pi]", theta0=theta0)
    derivatives = None
    if r_dot is not None:
        derivatives = PathDerivatives(r_dot, _constant(0.0), _constant(0.0))
    return PathSpec(
        r=r_fn,
        theta=_constant(theta0),
        phi=_constant(0.0),
        tau=tau,
        derivatives=derivatives,
        kind=PathKind.OPEN,
        family="shrink",
        params={"theta0": theta0},
    )


def _spline_function(
    spline: CubicSpline, lower: float = -np.inf, upper: float = np.inf
) -> ScalarFunction:
    # spline overshoot between nodes must not leave the Bloch ball
    return lambda t: float(np.clip(spline(t), lower, upper))


def family_sampled(
    table: npt.ArrayLike, family: str = "sampled", **params: float | str
) -> PathSpec:
    """
    Natural cubic-spline path through rows ``(t, r, theta, phi)``.

    The first row must be at ``t = 0``; derivatives come from the splines.
    """
    rows = np.asarray(table, dtype=float)
    _require(rows.ndim == 2 and rows.shape[1] == 4, "sampled table needs 4 columns")
    _require(len(rows) >= 3, "sampled table needs at least 3 rows", rows=len(rows))
    times = rows[:, 0]
    _require(times[0] == 0, "sampled table must start at t = 0", t0=float(times[0]))
    _require(
        bool(np.all(np.diff(times) > 0)), "sampled times must strictly increase"
    )

    splines = [
        CubicSpline(times, rows[:, column], bc_type="natural") for column in (1, 2, 3)
    ]
    r_spline, theta_spline, phi_spline = splines
    drift = float(np.max(np.abs(rows[:, 1] - rows[0, 1])))
    kind = PathKind.UNITARY if drift <= TOLERANCES.constant_radius else PathKind.OPEN

    derivative_fns: list[Callable[[float], float]] = [
        _spline_function(spline.derivative()) for spline in splines
    ]
    return PathSpec(
        r=_spline_function(r_spline, 0.0, 1.0),
        theta=_spline_function(theta_spline, 0.0, np.pi),
        phi=_spline_function(phi_spline),
        tau=float(times[-1]),
        derivatives=PathDerivatives(*derivative_fns),
        kind=kind,
        family=family,
        params={"rows": len(rows), **params},
    )
