from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gauges import WGauge, check_v_source
from .kraus import KrausPair, angle_terms, kraus_tilde
from ..base.interfaces import GaugeMatrixSource
from ..linalg import (
    ANCILLA_GROUND,
    IDENTITY2,
    CMat2,
    CMat4,
    dagger,
    kron,
    partial_trace_b,
    unitarity_defect,
)
from ..path import PathSpec


@dataclass(frozen=True)
class DilationSample:
    """System-ancilla unitary at time ``t``, basis index ``2a + b``"""

    t: float
    u_ab: CMat4

    def unitarity_defect(self) -> float:
        return unitarity_defect(self.u_ab)


def dilation_tilde(path: PathSpec, t: float) -> DilationSample:
    """
    Reference 4x4 dilation; its ancilla-ground columns carry ``kraus_tilde``.

    The remaining columns complete the isometry to a unitary.
    """
    ss, sc, cs, cc, r_plus, r_minus, phi, phi0 = angle_terms(path, t)

    def phase(angle: float) -> complex:
        return complex(np.exp(1j * angle))

    u_ab = np.array(
        [
            [
                -cs - r_minus * sc * phase(phi0 - phi),
                -r_plus * ss * phase(-phi),
                cc * phase(-phi0) - r_minus * ss * phase(-phi),
                r_plus * sc * phase(-phi - phi0),
            ],
            [
                r_plus * cc * phase(phi0),
                -sc * phase(phi0 - phi) - r_minus * cs,
                r_plus * cs,
                -ss * phase(-phi) + r_minus * cc * phase(-phi0),
            ],
            [
                -ss * phase(phi) + r_minus * cc * phase(phi0),
                r_plus * cs,
                sc * phase(phi - phi0) + r_minus * cs,
                -r_plus * cc * phase(-phi0),
            ],
            [
                r_plus * sc * phase(phi + phi0),
                cc * phase(phi0) - r_minus * ss * phase(phi),
                r_plus * ss * phase(phi),
                cs + r_minus * sc * phase(phi - phi0),
            ],
        ],
        dtype=np.complex128,
    )
    return DilationSample(t, u_ab)


def dilation_general(
    path: PathSpec, w: WGauge, v: GaugeMatrixSource, t: float
) -> DilationSample:
    """``U_ab = (I x W) U~_ab (V x I)``"""
    v_matrix = check_v_source(path, v, t)
    reference = dilation_tilde(path, t).u_ab
    return DilationSample(
        t, kron(IDENTITY2, w.matrix(t)) @ reference @ kron(v_matrix, IDENTITY2)
    )


def kraus_general(
    path: PathSpec, w: WGauge, v: GaugeMatrixSource, t: float
) -> KrausPair:
    """``M_mu = sum_nu W_{mu nu} M~_nu V``"""
    v_matrix = check_v_source(path, v, t)
    w_matrix = w.matrix(t)
    reference = kraus_tilde(path, t).operators
    m0, m1 = (
        sum(w_matrix[mu, nu] * reference[nu] for nu in range(2)) @ v_matrix
        for mu in range(2)
    )
    return KrausPair(m0, m1)


def preparation_kick(path: PathSpec, w: WGauge, v: GaugeMatrixSource) -> CMat4:
    """
    Returns ``U_ab(0)``.

    The realized protocol applies this unitary at ``t = 0`` and then evolves
    under ``H_ab``; the finite-difference generator only reproduces
    ``U_ab(t) U_ab(0)^dagger``.
    """
    return dilation_general(path, w, v, 0.0).u_ab


def reduced_state(u_ab: CMat4, rho0: CMat2) -> CMat2:
    """``tr_b[U (rho0 x |0><0|) U^dagger]``"""
    return partial_trace_b(u_ab @ kron(rho0, ANCILLA_GROUND) @ dagger(u_ab))
