from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ..linalg import CMat2, CMat4, dagger, frobenius
from ..path import PathSpec


class AngleTerms(NamedTuple):
    """Half-angle products and radial weights shared with the dilation"""

    ss: float
    sc: float
    cs: float
    cc: float
    r_plus: float
    r_minus: float
    phi: float
    phi0: float


def angle_terms(path: PathSpec, t: float) -> AngleTerms:
    r, theta, phi = path.coordinates(t)
    r0 = path.r0
    sin, cos = np.sin(theta / 2), np.cos(theta / 2)
    sin0, cos0 = np.sin(path.theta0 / 2), np.cos(path.theta0 / 2)
    return AngleTerms(
        ss=sin * sin0,
        sc=sin * cos0,
        cs=cos * sin0,
        cc=cos * cos0,
        r_plus=float(np.sqrt(max(0.0, (r + r0) / (1 + r0)))),
        r_minus=float(np.sqrt(max(0.0, (1 - r) / (1 + r0)))),
        phi=phi,
        phi0=path.phi0,
    )


@dataclass(frozen=True)
class KrausPair:
    m0: CMat2
    m1: CMat2

    @property
    def operators(self) -> tuple[CMat2, CMat2]:
        return self.m0, self.m1

    def completeness_defect(self) -> float:
        return frobenius(
            sum(dagger(operator) @ operator for operator in self.operators)
            - np.eye(2)
        )

    def apply(self, rho: CMat2) -> CMat2:
        return sum(operator @ rho @ dagger(operator) for operator in self.operators)


def _ket(theta: float, phi: float) -> np.ndarray:
    return np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)])


def _perp(theta: float, phi: float) -> np.ndarray:
    return np.array([-np.sin(theta / 2), np.exp(1j * phi) * np.cos(theta / 2)])


def _outer(ket: np.ndarray, bra: np.ndarray) -> CMat2:
    return np.outer(ket, np.conj(bra))


def kraus_tilde(path: PathSpec, t: float) -> KrausPair:
    """
    Reference Kraus pair taking ``rho(0)`` to ``rho(t)``.

    ``M1`` maps the initial Bloch direction onto the current one with weight
    ``r_plus``; ``M0`` sends its orthogonal complement there and leaks the
    ``r_minus`` part into the current orthogonal direction.
    """
    terms = angle_terms(path, t)
    _, theta, phi = path.coordinates(t)
    theta0, phi0 = path.theta0, path.phi0
    current, current_perp = _ket(theta, phi), _perp(theta, phi)
    initial, initial_perp = _ket(theta0, phi0), _perp(theta0, phi0)
    m1 = terms.r_plus * np.exp(1j * phi0) * _outer(current, initial)
    m0 = _outer(current, initial_perp) + terms.r_minus * np.exp(
        1j * (phi0 - phi)
    ) * _outer(current_perp, initial)
    return KrausPair(m0.astype(np.complex128), m1.astype(np.complex128))


def kraus_from_dilation(u_ab: CMat4) -> KrausPair:
    """Reads ``(M_mu)_{a'a} = <a' mu| U_ab |a 0>`` off the ancilla-ground columns"""
    return KrausPair(np.array(u_ab[0::2, 0::2]), np.array(u_ab[1::2, 0::2]))


def embedding_defect(pair: KrausPair, u_ab: CMat4) -> float:
    extracted = kraus_from_dilation(u_ab)
    return max(
        frobenius(extracted.m0 - pair.m0), frobenius(extracted.m1 - pair.m1)
    )

