from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .connection import connection_k
from ..base.errors import DegenerateInitialState, DomainError, UndefinedPhase
from ..core import TOLERANCES
from ..path import PathSpec, SpectralInit, TimeGrid
from ..unitary import AlphaGauge, require_unitary_kind, u_general
from ..utils import integrate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PhaseResult:
    gamma: float  # principal value in (-pi, pi]
    connection_integrals: tuple[complex, complex]
    grid_n: int
    trace_sum: complex
    near_branch_cut: bool = False

    def as_dict(self) -> dict:
        return {
            "gamma": self.gamma,
            "connection_integrals": [
                [value.real, value.imag] for value in self.connection_integrals
            ],
            "grid_n": self.grid_n,
            "trace_sum": [self.trace_sum.real, self.trace_sum.imag],
            "near_branch_cut": self.near_branch_cut,
        }


def _principal_arg(value: complex) -> float:
    if abs(value) < TOLERANCES.undefined_phase:
        raise UndefinedPhase(
            "trace sum vanishes, its argument is undefined",
            data={"modulus": abs(value)},
        )
    gamma = float(np.angle(value))
    # np.angle returns -pi on the negative real axis with a -0.0 imaginary part
    return np.pi if gamma == -np.pi else gamma


def _require_phase_inputs(path: PathSpec) -> None:
    require_unitary_kind(path)
    if path.r0 <= TOLERANCES.degenerate_radius:
        raise DegenerateInitialState(
            "geometric phase needs r0 > 0", data={"r0": path.r0}
        )


def _traces_at_end(
    path: PathSpec, init: SpectralInit, gauge: AlphaGauge
) -> tuple[complex, complex]:
    final = u_general(path, init, gauge, path.tau)
    return tuple(  # type: ignore[return-value]
        complex(np.trace(projector @ final)) for projector in init.projectors
    )


def geometric_phase(
    path: PathSpec, init: SpectralInit, gauge: AlphaGauge, grid: TimeGrid
) -> PhaseResult:
    """
    ``arg sum_k w_k tr[rho_k(0) U(tau)] exp(-int_0^tau tr[rho_k(0) U^dagger U'] dt)``.

    The connection integrals use Simpson's rule on ``grid``; the result does
    not depend on the gauge.
    """
    _require_phase_inputs(path)
    if abs(grid.tau - path.tau) > TOLERANCES.domain_slack * max(1.0, path.tau):
        raise DomainError(
            "phase grid must span the whole path",
            data={"grid_tau": grid.tau, "tau": path.tau},
        )
    points = grid.points
    integrals = tuple(
        integrate(
            np.array([connection_k(path, init, gauge, float(t), k) for t in points]),
            points,
        )
        for k in (1, 2)
    )
    traces = _traces_at_end(path, init, gauge)
    trace_sum = complex(
        sum(
            weight * trace * np.exp(-integral)
            for weight, trace, integral in zip(init.weights, traces, integrals)
        )
    )
    gamma = _principal_arg(trace_sum)
    near_cut = np.pi - abs(gamma) < TOLERANCES.branch_cut
    if near_cut:
        logger.warning(
            "geometric phase %.9f lies within %.1e of the branch cut",
            gamma,
            TOLERANCES.branch_cut,
        )
    logger.debug("geometric phase %.12f on %d nodes", gamma, len(points))
    return PhaseResult(gamma, integrals, grid.n, trace_sum, bool(near_cut))


def total_phase(path: PathSpec, init: SpectralInit, gauge: AlphaGauge) -> float:
    """
    ``arg sum_k w_k tr[rho_k(0) U(tau)]``, equal to the geometric phase under
    parallel transport
    """
    _require_phase_inputs(path)
    traces = _traces_at_end(path, init, gauge)
    return _principal_arg(
        complex(sum(weight * trace for weight, trace in zip(init.weights, traces)))
    )


def gamma_closed_form(r0: float, theta0: float) -> float:
    """``-atan(r0 tan(pi (1 - cos theta0)))`` for a full constant-latitude loop"""
    angle = np.pi * (1 - np.cos(theta0))
    if abs(np.cos(angle)) < TOLERANCES.undefined_phase:
        return -np.pi / 2
    return float(-np.arctan(r0 * np.tan(angle)))


def phase_distance_mod_pi(first: float, second: float) -> float:
    """Distance between two phases on the circle of period pi"""
    difference = float(np.mod(first - second, np.pi))
    return min(difference, np.pi - difference)
