from __future__ import annotations

import numpy as np

from ..linalg import CMat2, dagger
from ..path import PathSpec, SpectralInit
from ..unitary import (
    AlphaGauge,
    require_unitary_kind,
    tilde_u,
    tilde_u_dot,
    u_general,
    v_gauge,
    v_gauge_dot,
)
from ..utils import derivative


def u_dot(
    path: PathSpec,
    init: SpectralInit,
    gauge: AlphaGauge,
    t: float,
    h: float | None = None,
) -> CMat2:
    """
    ``U' = U~' V + U~ V'``; central differences of ``U`` for paths without
    analytic rates
    """
    require_unitary_kind(path)
    if h is None:
        h = path.default_step
    if path.derivatives is None:
        return derivative(
            lambda s: u_general(path, init, gauge, s), t, h, 0.0, path.tau
        )
    return tilde_u_dot(path, t, h) @ v_gauge(init, gauge, t) + tilde_u(
        path, t
    ) @ v_gauge_dot(init, gauge, t, h, path.tau)


def connection_k(
    path: PathSpec,
    init: SpectralInit,
    gauge: AlphaGauge,
    t: float,
    k: int,
    h: float | None = None,
) -> complex:
    """``tr[rho_k(0) U^dagger U']``, purely imaginary for a unitary family"""
    if k not in {1, 2}:
        raise ValueError(f"eigenprojector index must be 1 or 2, got {k}")
    unitary = u_general(path, init, gauge, t)
    projector = init.projectors[k - 1]
    rate = u_dot(path, init, gauge, t, h)
    return complex(np.trace(projector @ dagger(unitary) @ rate))


def connection_residual(
    path: PathSpec,
    init: SpectralInit,
    gauge: AlphaGauge,
    points: np.ndarray,
) -> float:
    """``max_{t, k} |tr[rho_k(0) U^dagger U']|`` over the given times"""
    return max(
        abs(connection_k(path, init, gauge, float(t), k))
        for t in points
        for k in (1, 2)
    )
