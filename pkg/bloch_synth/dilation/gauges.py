from __future__ import annotations

import logging
from collections.abc import Callable
from math import inf

import numpy as np
import numpy.typing as npt
from scipy.interpolate import CubicSpline

from ..base.errors import GaugeMismatch, InvalidFamilyParameter
from ..base.interfaces import GaugeMatrixSource
from ..core import TOLERANCES
from ..linalg import (
    IDENTITY2,
    PAULIS,
    CMat2,
    as_cmat,
    commutator,
    expm_skew,
    frobenius,
    unitarity_defect,
)
from ..path import PathSpec, SpectralInit, rho0
from ..unitary import AlphaGauge, v_gauge, v_gauge_dot

logger = logging.getLogger(__name__)

MatrixFunction = Callable[[float], CMat2]
VectorFunction = Callable[[float], np.ndarray]


class WGauge(GaugeMatrixSource):
    """
    Ancilla-side SU(2) path ``W(t)`` mixing the two Kraus operators.

    Every sample is checked for unitarity and unit determinant.
    """

    def __init__(
        self,
        w: MatrixFunction,
        w_dot: MatrixFunction | None = None,
        label: str = "custom",
    ) -> None:
        self.w = w
        self.w_dot = w_dot
        self.label = label
        start = frobenius(self.matrix(0.0) - IDENTITY2)
        if start > TOLERANCES.su2:
            logger.warning(
                "W(0) differs from identity by %.3e; only the preparation kick changes",
                start,
            )

    @classmethod
    def identity(cls) -> WGauge:
        return cls(lambda _: IDENTITY2, lambda _: np.zeros((2, 2), complex), "identity")

    @classmethod
    def from_rotation(cls, rotation: VectorFunction, label: str = "rotation") -> WGauge:
        """``W(t) = exp(-i a(t) . sigma)`` for a real rotation-vector function ``a``"""

        def w(t: float) -> CMat2:
            generator = sum(
                float(component) * pauli
                for component, pauli in zip(rotation(t), PAULIS)
            )
            return expm_skew(generator, 1.0, t)

        return cls(w, label=label)

    def matrix(self, t: float) -> CMat2:
        value = as_cmat(self.w(t))
        defect = unitarity_defect(value)
        determinant = abs(complex(np.linalg.det(value)) - 1)
        if defect > TOLERANCES.su2 or determinant > TOLERANCES.su2:
            raise GaugeMismatch(
                "W gauge must be special unitary",
                data={"t": t, "unitarity": defect, "determinant": determinant},
            )
        return value

    def rate(
        self, t: float, h: float, lower: float = -inf, upper: float = inf
    ) -> CMat2:
        if self.w_dot is not None:
            return as_cmat(self.w_dot(t))
        return super().rate(t, h, lower, upper)


def w_from_rotation(rotation: VectorFunction, label: str = "rotation") -> WGauge:
    return WGauge.from_rotation(rotation, label)


def w_from_samples(table: npt.ArrayLike, label: str = "sampled") -> WGauge:
    """Spline-interpolated rotation vector from rows ``(t, ax, ay, az)``"""
    rows = np.asarray(table, dtype=float)
    if rows.ndim != 2 or rows.shape[1] != 4 or len(rows) < 3:
        raise InvalidFamilyParameter(
            "W samples need at least 3 rows of (t, ax, ay, az)",
            data={"shape": list(rows.shape)},
        )
    if not np.all(np.diff(rows[:, 0]) > 0):
        raise InvalidFamilyParameter("W sample times must strictly increase")
    spline = CubicSpline(rows[:, 0], rows[:, 1:], bc_type="natural")
    return WGauge.from_rotation(spline, label)


class AlphaVSource(GaugeMatrixSource):
    """``V(t) = sum_k exp(i alpha_k) rho_k(0)``, commutes with ``rho(0)``"""

    def __init__(self, init: SpectralInit, gauge: AlphaGauge) -> None:
        self.init = init
        self.gauge = gauge
        self.label = f"alpha:{gauge.label}"

    def matrix(self, t: float) -> CMat2:
        return v_gauge(self.init, self.gauge, t)

    def rate(
        self, t: float, h: float, lower: float = -inf, upper: float = inf
    ) -> CMat2:
        return v_gauge_dot(self.init, self.gauge, t, h, upper)


class ArbitraryVSource(GaugeMatrixSource):
    """Any unitary ``V(t)``; only admissible when ``r0 = 0``"""

    def __init__(
        self,
        unitary: MatrixFunction,
        unitary_dot: MatrixFunction | None = None,
        label: str = "arbitrary",
    ) -> None:
        self.unitary = unitary
        self.unitary_dot = unitary_dot
        self.label = label

    def matrix(self, t: float) -> CMat2:
        return as_cmat(self.unitary(t))

    def rate(
        self, t: float, h: float, lower: float = -inf, upper: float = inf
    ) -> CMat2:
        if self.unitary_dot is not None:
            return as_cmat(self.unitary_dot(t))
        return super().rate(t, h, lower, upper)


def v_identity() -> ArbitraryVSource:
    return ArbitraryVSource(
        lambda _: IDENTITY2, lambda _: np.zeros((2, 2), complex), "identity"
    )


def v_arbitrary(
    unitary: MatrixFunction, unitary_dot: MatrixFunction | None = None
) -> ArbitraryVSource:
    return ArbitraryVSource(unitary, unitary_dot)


def check_v_source(path: PathSpec, source: GaugeMatrixSource, t: float) -> CMat2:
    """Returns ``V(t)``, checked to commute with ``rho(0)`` whenever ``r0 > 0``"""
    value = source.matrix(t)
    if path.r0 > TOLERANCES.degenerate_radius:
        residual = frobenius(commutator(value, rho0(path)))
        if residual > TOLERANCES.gauge_commutation:
            raise GaugeMismatch(
                "V gauge must commute with rho(0) when r0 > 0",
                data={"t": t, "commutator": residual, "source": source.describe()},
            )
    return value
