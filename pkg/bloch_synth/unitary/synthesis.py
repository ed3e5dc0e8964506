from __future__ import annotations

import logging
from collections.abc import Callable
from math import inf

import numpy as np

from .gauges import AlphaGauge
from ..base.errors import KindMismatch
from ..core import TOLERANCES
from ..linalg import CMat2, dagger, generator_from_unitary
from ..path import PathKind, PathSpec, SpectralInit, derivatives_at

logger = logging.getLogger(__name__)


def require_unitary_kind(path: PathSpec) -> None:
    if path.kind is not PathKind.UNITARY:
        raise KindMismatch(
            "operation needs a constant-radius (unitary) path",
            data={"family": path.family, "kind": path.kind.to_string()},
        )


def _half_angles(path: PathSpec, t: float) -> tuple[float, float, float]:
    _, theta, phi = path.coordinates(t)
    return (
        (theta - path.theta0) / 2,
        (phi - path.phi0) / 2,
        (phi + path.phi0) / 2,
    )


def tilde_u(path: PathSpec, t: float) -> CMat2:
    """Reference unitary carrying ``rho(0)`` onto ``rho(t)``; identity at ``t = 0``"""
    half, difference, total = _half_angles(path, t)
    cos, sin = np.cos(half), np.sin(half)
    return np.array(
        [
            [cos * np.exp(-1j * difference), -sin * np.exp(-1j * total)],
            [sin * np.exp(1j * total), cos * np.exp(1j * difference)],
        ],
        dtype=np.complex128,
    )


def tilde_u_dot(path: PathSpec, t: float, h: float | None = None) -> CMat2:
    """Chain-rule time derivative of ``tilde_u``"""
    half, difference, total = _half_angles(path, t)
    _, theta_dot, phi_dot = derivatives_at(path, t, h)
    cos, sin = np.cos(half), np.sin(half)
    half_theta, half_phi = theta_dot / 2, phi_dot / 2
    return np.array(
        [
            [
                (-half_theta * sin - 1j * half_phi * cos) * np.exp(-1j * difference),
                (-half_theta * cos + 1j * half_phi * sin) * np.exp(-1j * total),
            ],
            [
                (half_theta * cos + 1j * half_phi * sin) * np.exp(1j * total),
                (-half_theta * sin + 1j * half_phi * cos) * np.exp(1j * difference),
            ],
        ],
        dtype=np.complex128,
    )


def v_gauge(init: SpectralInit, gauge: AlphaGauge, t: float) -> CMat2:
    alpha1, alpha2 = gauge.values(t)
    return np.exp(1j * alpha1) * init.rho1_0 + np.exp(1j * alpha2) * init.rho2_0


def v_gauge_dot(
    init: SpectralInit, gauge: AlphaGauge, t: float, h: float, tau: float
) -> CMat2:
    alpha1, alpha2 = gauge.values(t)
    rate1, rate2 = gauge.rates(t, h, 0.0, tau)
    return 1j * (
        rate1 * np.exp(1j * alpha1) * init.rho1_0
        + rate2 * np.exp(1j * alpha2) * init.rho2_0
    )


def u_general(
    path: PathSpec, init: SpectralInit, gauge: AlphaGauge, t: float
) -> CMat2:
    require_unitary_kind(path)
    return tilde_u(path, t) @ v_gauge(init, gauge, t)


def gauge_rates(
    path: PathSpec, gauge: AlphaGauge, t: float, h: float | None = None
) -> tuple[float, float]:
    if h is None:
        h = path.default_step
    return gauge.rates(t, h, 0.0, path.tau)


def h_general(
    path: PathSpec,
    init: SpectralInit,
    gauge: AlphaGauge,
    t: float,
    h: float | None = None,
) -> CMat2:
    """
    Explicit gauge-family Hamiltonian of a constant-radius path.

    ``init`` fixes which eigenprojector of ``rho(0)`` each phase multiplies
    (``alpha1`` the ``delta = +1`` one), so the closed form needs only the path
    angles, their rates and the gauge rates.
    """
    require_unitary_kind(path)
    _, theta, phi = path.coordinates(t)
    _, theta_dot, phi_dot = derivatives_at(path, t, h)
    rate1, rate2 = gauge_rates(path, gauge, t, h)
    cos, sin = np.cos(theta), np.sin(theta)
    tilt = (rate2 - rate1) * sin
    return 0.5 * np.array(
        [
            [
                phi_dot - rate1 * (1 + cos) - rate2 * (1 - cos),
                (-1j * theta_dot + tilt) * np.exp(-1j * phi),
            ],
            [
                (1j * theta_dot + tilt) * np.exp(1j * phi),
                -phi_dot - rate1 * (1 - cos) - rate2 * (1 + cos),
            ],
        ],
        dtype=np.complex128,
    )


def h_operator_form(
    path: PathSpec,
    init: SpectralInit,
    gauge: AlphaGauge,
    t: float,
    h: float | None = None,
) -> CMat2:
    """``H~(t) - sum_k alpha_k' rho_k(t)`` assembled from operators"""
    require_unitary_kind(path)
    reference = tilde_u(path, t)
    h_tilde = 1j * tilde_u_dot(path, t, h) @ dagger(reference)
    rates = gauge_rates(path, gauge, t, h)
    return h_tilde - sum(
        rate * reference @ projector @ dagger(reference)
        for rate, projector in zip(rates, init.projectors)
    )


def h_numeric(
    u_fn: Callable[[float], CMat2],
    t: float,
    h: float,
    lower: float = -inf,
    upper: float = inf,
) -> CMat2:
    """Finite-difference ``i U' U^dagger``, an independent check of ``h_general``"""
    sample = generator_from_unitary(u_fn, t, h, lower, upper)
    if sample.skew_defect > TOLERANCES.generator_skew:
        logger.warning(
            "numeric generator at t=%.6g had skew defect %.3e before Hermitization",
            t,
            sample.skew_defect,
        )
    return sample.matrix
