from __future__ import annotations

from collections.abc import Callable

import numpy as np
import pytest

from bloch_synth import AlphaGauge, PathKind, PathSpec, family_circle
from bloch_synth.path import PathDerivatives

COS_THETA0 = 2 / 3
THETA0 = float(np.arccos(COS_THETA0))


@pytest.fixture()
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


def fourier_path(
    rng: np.random.Generator,
    r0: float | None = None,
    shrink: float = 0.0,
    amplitude: float = 0.15,
) -> PathSpec:
    """
    Smooth path on ``[0, 1]``: one Fourier harmonic on ``theta`` and ``phi``.

    ``shrink > 0`` makes ``r(t) = r0 (1 - shrink sin^2(pi t))``, an open path.
    """
    if r0 is None:
        r0 = float(rng.uniform(0.2, 1.0))
    theta_c = float(rng.uniform(0.8, 2.3))
    theta_a = float(rng.uniform(-amplitude, amplitude))
    phi0 = float(rng.uniform(-np.pi, np.pi))
    omega = float(rng.uniform(0.5, 1.5))
    phi_a = float(rng.uniform(-amplitude, amplitude))
    two_pi = 2 * np.pi

    def radius(t: float) -> float:
        return r0 * (1 - shrink * np.sin(np.pi * t) ** 2)

    def radius_dot(t: float) -> float:
        return -r0 * shrink * np.pi * np.sin(two_pi * t)

    def theta(t: float) -> float:
        return theta_c + theta_a * np.sin(two_pi * t)

    def theta_dot(t: float) -> float:
        return theta_a * two_pi * np.cos(two_pi * t)

    def phi(t: float) -> float:
        return phi0 + omega * t + phi_a * np.sin(two_pi * t)

    def phi_dot(t: float) -> float:
        return omega + phi_a * two_pi * np.cos(two_pi * t)

    return PathSpec(
        r=radius,
        theta=theta,
        phi=phi,
        tau=1.0,
        derivatives=PathDerivatives(radius_dot, theta_dot, phi_dot),
        kind=PathKind.OPEN if shrink else PathKind.UNITARY,
        family="fourier",
    )


def sine_gauge(rng: np.random.Generator, amplitude: float = 0.5) -> AlphaGauge:
    """``alpha_k = c_k sin(d_k t)`` with analytic rates"""
    c1, c2 = rng.uniform(-amplitude, amplitude, size=2)
    d1, d2 = rng.uniform(0.5, 2.0, size=2)
    return AlphaGauge(
        lambda t: c1 * np.sin(d1 * t),
        lambda t: c2 * np.sin(d2 * t),
        lambda t: c1 * d1 * np.cos(d1 * t),
        lambda t: c2 * d2 * np.cos(d2 * t),
        label="sine",
    )


def numeric_gauge(rng: np.random.Generator, amplitude: float = 0.5) -> AlphaGauge:
    """Same shape as ``sine_gauge`` but without rates, so they come from stencils"""
    c1, c2 = rng.uniform(-amplitude, amplitude, size=2)
    return AlphaGauge(
        lambda t: c1 * np.sin(t), lambda t: c2 * t * t, label="numeric"
    )


@pytest.fixture()
def unitary_path_factory(rng) -> Callable[..., PathSpec]:
    return lambda **kwargs: fourier_path(rng, **kwargs)


@pytest.fixture()
def open_path_factory(rng) -> Callable[..., PathSpec]:
    def factory(**kwargs) -> PathSpec:
        kwargs.setdefault("r0", float(rng.uniform(0.3, 0.9)))
        kwargs.setdefault("shrink", float(rng.uniform(0.1, 0.5)))
        return fourier_path(rng, **kwargs)

    return factory


@pytest.fixture()
def gauge_factory(rng) -> Callable[..., AlphaGauge]:
    return lambda **kwargs: sine_gauge(rng, **kwargs)


@pytest.fixture()
def circle() -> PathSpec:
    return family_circle(0.5, THETA0, 1.0)
