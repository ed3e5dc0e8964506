from __future__ import annotations

import numpy as np
import numpy.typing as npt

CMat2 = npt.NDArray[np.complex128]
CMat4 = npt.NDArray[np.complex128]
CMat = npt.NDArray[np.complex128]  # either size

IDENTITY2: CMat2 = np.eye(2, dtype=np.complex128)
IDENTITY4: CMat4 = np.eye(4, dtype=np.complex128)
PAULI_X: CMat2 = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y: CMat2 = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z: CMat2 = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULIS: tuple[CMat2, CMat2, CMat2] = (PAULI_X, PAULI_Y, PAULI_Z)

# ancilla projector |0><0| on the second tensor factor
ANCILLA_GROUND: CMat2 = np.array([[1, 0], [0, 0]], dtype=np.complex128)


def as_cmat(matrix: npt.ArrayLike) -> CMat:
    result = np.asarray(matrix, dtype=np.complex128)
    if result.shape not in {(2, 2), (4, 4)}:
        raise ValueError(f"expected a 2x2 or 4x4 matrix, got shape {result.shape}")
    return result


def dagger(matrix: CMat) -> CMat:
    return np.conj(np.transpose(matrix))


def kron(system: CMat2, ancilla: CMat2) -> CMat4:
    """Tensor product with the system first: basis index ``2a + b``"""
    return np.kron(system, ancilla)


def partial_trace_b(matrix: CMat4) -> CMat2:
    """Traces out the ancilla (second) factor of a 4x4 operator"""
    return np.einsum("ijkj->ik", np.reshape(matrix, (2, 2, 2, 2)))


def commutator(left: CMat, right: CMat) -> CMat:
    return left @ right - right @ left


def frobenius(matrix: npt.ArrayLike) -> float:
    return float(np.linalg.norm(matrix))


def hermiticity_defect(matrix: CMat) -> float:
    return frobenius(matrix - dagger(matrix))


def relative_hermiticity_defect(matrix: CMat) -> float:
    return hermiticity_defect(matrix) / max(1.0, frobenius(matrix))


def unitarity_defect(matrix: CMat) -> float:
    return frobenius(dagger(matrix) @ matrix - np.eye(len(matrix)))


def hermitize(matrix: CMat) -> CMat:
    return (matrix + dagger(matrix)) / 2
