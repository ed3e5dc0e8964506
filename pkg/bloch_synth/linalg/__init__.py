from .exponentials import expm_skew, require_hermitian
from .generators import GeneratorSample, generator_from_unitary
from .matrices import (
    ANCILLA_GROUND,
    IDENTITY2,
    IDENTITY4,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    PAULIS,
    CMat,
    CMat2,
    CMat4,
    as_cmat,
    commutator,
    dagger,
    frobenius,
    hermiticity_defect,
    hermitize,
    kron,
    partial_trace_b,
    relative_hermiticity_defect,
    unitarity_defect,
)
from .metrics import bloch_vector, trace_distance
