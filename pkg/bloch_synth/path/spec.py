from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any, NamedTuple

import numpy as np
from typing_extensions import Self

from ..base.errors import DomainError, InvalidFamilyParameter
from ..core import DEFAULTS, TOLERANCES
from ..linalg import CMat2, bloch_vector
from ..utils import TypeEnum, derivative

logger = logging.getLogger(__name__)

ScalarFunction = Callable[[float], float]

VALIDATION_SAMPLES = 257


class PathKind(TypeEnum):
    UNITARY = 0
    OPEN = 1


class BlochCoordinates(NamedTuple):
    r: float
    theta: float
    phi: float


@dataclass(frozen=True)
class PathDerivatives:
    r_dot: ScalarFunction
    theta_dot: ScalarFunction
    phi_dot: ScalarFunction


@dataclass(frozen=True)
class TimeGrid:
    """Uniform partition of ``[0, tau]`` into ``n`` steps (``n + 1`` nodes)"""

    n: int
    tau: float

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"grid needs at least one step, got n={self.n}")
        if not self.tau > 0:
            raise ValueError(f"grid end time must be positive, got tau={self.tau}")

    @classmethod
    def for_simpson(cls, n: int, tau: float) -> Self:
        return cls(n + n % 2, tau)

    @property
    def points(self) -> np.ndarray:
        return np.linspace(0.0, self.tau, self.n + 1)

    @property
    def step(self) -> float:
        return self.tau / self.n

    @property
    def midpoints(self) -> np.ndarray:
        return (np.arange(self.n) + 0.5) * self.step

    def refined(self, factor: int = 2) -> Self:
        return type(self)(self.n * factor, self.tau)


@dataclass(frozen=True)
class PathSpec:
    """
    Prescribed Bloch-vector trajectory ``(r(t), theta(t), phi(t))`` on ``[0, tau]``.

    ``phi`` is kept unwrapped: derivatives and running integrals of it must
    not see jumps of 2 pi.
    """

    r: ScalarFunction
    theta: ScalarFunction
    phi: ScalarFunction
    tau: float
    derivatives: PathDerivatives | None = None
    kind: PathKind = PathKind.OPEN
    family: str = "custom"
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not np.isfinite(self.tau) or self.tau <= 0:
            raise InvalidFamilyParameter(
                "path end time must be positive", data={"tau": self.tau}
            )
        self.validate(np.linspace(0.0, self.tau, VALIDATION_SAMPLES))

    def validate(self, points: np.ndarray) -> None:
        slack = TOLERANCES.domain_slack
        r_values = np.array([self.r(t) for t in points])
        theta_values = np.array([self.theta(t) for t in points])
        if np.any(r_values < -slack) or np.any(r_values > 1 + slack):
            raise InvalidFamilyParameter(
                "Bloch radius leaves [0, 1]",
                data={"min": float(r_values.min()), "max": float(r_values.max())},
            )
        if np.any(theta_values < -slack) or np.any(theta_values > np.pi + slack):
            raise InvalidFamilyParameter(
                "polar angle leaves [0, pi]",
                data={
                    "min": float(theta_values.min()),
                    "max": float(theta_values.max()),
                },
            )
        drift = float(np.max(np.abs(r_values - r_values[0])))
        if self.kind is PathKind.UNITARY and drift > TOLERANCES.constant_radius:
            raise InvalidFamilyParameter(
                "unitary path must keep r constant", data={"drift": drift}
            )

    def check_time(self, t: float) -> None:
        slack = TOLERANCES.domain_slack * max(1.0, self.tau)
        if not -slack <= t <= self.tau + slack:
            raise DomainError(
                f"time {t} outside [0, {self.tau}]", data={"t": t, "tau": self.tau}
            )

    def coordinates(self, t: float) -> BlochCoordinates:
        self.check_time(t)
        return BlochCoordinates(
            float(self.r(t)), float(self.theta(t)), float(self.phi(t))
        )

    @property
    def r0(self) -> float:
        return float(self.r(0.0))

    @property
    def theta0(self) -> float:
        return float(self.theta(0.0))

    @property
    def phi0(self) -> float:
        return float(self.phi(0.0))

    @property
    def default_step(self) -> float:
        return self.tau * DEFAULTS.fd_step_fraction

    def describe(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "kind": self.kind.to_string(),
            "tau": self.tau,
            "analytic_derivatives": self.derivatives is not None,
            **self.params,
        }


def density_matrix(r: float, theta: float, phi: float) -> CMat2:
    off_diagonal = r * np.sin(theta)
    return 0.5 * np.array(
        [
            [1 + r * np.cos(theta), off_diagonal * np.exp(-1j * phi)],
            [off_diagonal * np.exp(1j * phi), 1 - r * np.cos(theta)],
        ],
        dtype=np.complex128,
    )


def rho_of_t(path: PathSpec, t: float) -> CMat2:
    return density_matrix(*path.coordinates(t))


def rho0(path: PathSpec) -> CMat2:
    return rho_of_t(path, 0.0)


def derivatives_at(
    path: PathSpec, t: float, h: float | None = None
) -> tuple[float, float, float]:
    """Returns ``(r', theta', phi')``, analytic when the path carries them"""
    path.check_time(t)
    if path.derivatives is not None:
        return (
            float(path.derivatives.r_dot(t)),
            float(path.derivatives.theta_dot(t)),
            float(path.derivatives.phi_dot(t)),
        )
    if h is None:
        h = path.default_step
    return tuple(  # type: ignore[return-value]
        float(derivative(function, t, h, 0.0, path.tau))
        for function in (path.r, path.theta, path.phi)
    )


def bloch_coordinates(rho: CMat2) -> BlochCoordinates:
    """Inverse of ``density_matrix``; the azimuth is meaningless at the poles"""
    x, y, z = bloch_vector(rho)
    r = float(np.sqrt(x * x + y * y + z * z))
    if r == 0:
        return BlochCoordinates(0.0, 0.0, 0.0)
    theta = float(np.arccos(np.clip(z / r, -1.0, 1.0)))
    return BlochCoordinates(r, theta, float(np.arctan2(y, x)))
