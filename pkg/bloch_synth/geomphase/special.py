from __future__ import annotations

import numpy as np

from ..linalg import CMat2
from ..path import PathSpec, derivatives_at
from ..unitary import require_unitary_kind


def h_parallel(path: PathSpec, t: float, h: float | None = None) -> CMat2:
    """Hamiltonian of the parallel-transport gauge, traceless"""
    require_unitary_kind(path)
    _, theta, phi = path.coordinates(t)
    _, theta_dot, phi_dot = derivatives_at(path, t, h)
    sin, cos = np.sin(theta), np.cos(theta)
    tilt = phi_dot * sin * cos
    return 0.5 * np.array(
        [
            [phi_dot * sin**2, (-1j * theta_dot - tilt) * np.exp(-1j * phi)],
            [(1j * theta_dot - tilt) * np.exp(1j * phi), -phi_dot * sin**2],
        ],
        dtype=np.complex128,
    )


def circle_h(theta0: float, omega: float, t: float) -> CMat2:
    """Parallel-transport Hamiltonian of the constant-latitude loop ``phi = omega t``"""
    sin, cos = np.sin(theta0), np.cos(theta0)
    return (omega * sin / 2) * np.array(
        [
            [sin, -cos * np.exp(-1j * omega * t)],
            [-cos * np.exp(1j * omega * t), -sin],
        ],
        dtype=np.complex128,
    )
