from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from ..linalg import IDENTITY2, PAULIS, CMat2, require_hermitian
from ..path import TimeGrid


@dataclass(frozen=True)
class PulseSample:
    """Magnetic-field form ``H = b0 I + (b . sigma) / 2`` of a 2x2 Hamiltonian"""

    t: float
    b0: float
    b: np.ndarray  # (Bx, By, Bz), angular-frequency units

    def hamiltonian(self) -> CMat2:
        return self.b0 * IDENTITY2 + 0.5 * sum(
            component * pauli for component, pauli in zip(self.b, PAULIS)
        )

    def as_row(self) -> list[float]:
        return [self.t, self.b0, *(float(component) for component in self.b)]


def pulse_decompose(hamiltonian: CMat2, t: float) -> PulseSample:
    require_hermitian(hamiltonian, t)
    return PulseSample(
        t=t,
        b0=float(np.trace(hamiltonian).real) / 2,
        b=np.array([float(np.trace(hamiltonian @ pauli).real) for pauli in PAULIS]),
    )


def pulse_schedule(
    h_fn: Callable[[float], CMat2], grid: TimeGrid
) -> list[PulseSample]:
    return [pulse_decompose(h_fn(float(t)), float(t)) for t in grid.points]
