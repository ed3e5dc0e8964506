from __future__ import annotations

import numpy as np

from .exponentials import require_hermitian
from .matrices import PAULIS, CMat2


def trace_distance(left: CMat2, right: CMat2) -> float:
    require_hermitian(left)
    require_hermitian(right)
    difference = left - right
    difference = (difference + np.conj(difference.T)) / 2
    return float(np.sum(np.abs(np.linalg.eigvalsh(difference)))) / 2


def bloch_vector(rho: CMat2) -> np.ndarray:
    return np.array([float(np.trace(rho @ pauli).real) for pauli in PAULIS])
