from __future__ import annotations

import numpy as np

from .matrices import IDENTITY2, PAULIS, CMat, dagger, relative_hermiticity_defect
from ..base.errors import NonHermitianInput
from ..core import TOLERANCES


def require_hermitian(matrix: CMat, t: float | None = None) -> None:
    defect = relative_hermiticity_defect(matrix)
    if defect > TOLERANCES.hermiticity:
        raise NonHermitianInput(
            "generator is not Hermitian", data={"defect": defect, "t": t}
        )


def _expm_skew_2x2(hamiltonian: CMat, dt: float) -> CMat:
    offset = float(np.trace(hamiltonian).real) / 2
    field = np.array(
        [float(np.trace(hamiltonian @ pauli).real) / 2 for pauli in PAULIS]
    )
    angle = float(np.linalg.norm(field)) * dt
    # sin(|h| dt) / |h| without the division at |h| = 0
    sin_over_norm = dt * np.sinc(angle / np.pi)
    rotation = np.cos(angle) * IDENTITY2 - 1j * sin_over_norm * sum(
        component * pauli for component, pauli in zip(field, PAULIS)
    )
    return np.exp(-1j * offset * dt) * rotation


def _expm_skew_eigh(hamiltonian: CMat, dt: float) -> CMat:
    eigenvalues, eigenvectors = np.linalg.eigh(hamiltonian)
    return (eigenvectors * np.exp(-1j * eigenvalues * dt)) @ dagger(eigenvectors)


def expm_skew(hamiltonian: CMat, dt: float, t: float | None = None) -> CMat:
    """
    Returns ``exp(-i H dt)`` for a Hermitian 2x2 or 4x4 generator.

    2x2 uses the Pauli closed form, 4x4 the eigendecomposition.
    """
    require_hermitian(hamiltonian, t)
    if hamiltonian.shape == (2, 2):
        return _expm_skew_2x2(hamiltonian, dt)
    return _expm_skew_eigh(hamiltonian, dt)
