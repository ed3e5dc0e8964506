from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from ..linalg import (
    ANCILLA_GROUND,
    CMat,
    CMat2,
    CMat4,
    dagger,
    expm_skew,
    hermiticity_defect,
    kron,
    partial_trace_b,
    trace_distance,
    unitarity_defect,
)
from ..path import TimeGrid

logger = logging.getLogger(__name__)

HamiltonianFunction = Callable[[float], CMat]
ReferenceFunction = Callable[[float], CMat2]


@dataclass(frozen=True)
class PropagationResult:
    """
    States recorded at every grid node, with the worst residuals seen on the way.

    ``max_trace_distance`` is ``None`` when no reference trajectory was given.
    """

    grid: TimeGrid
    states: list[CMat2] = field(repr=False)
    max_trace_distance: float | None
    max_hermiticity_defect: float
    max_unitarity_defect: float
    max_trace_drift: float
    min_eigenvalue: float

    @property
    def final_state(self) -> CMat2:
        return self.states[-1]

    def distances_to(self, reference: ReferenceFunction) -> np.ndarray:
        return np.array(
            [
                trace_distance(state, reference(float(t)))
                for state, t in zip(self.states, self.grid.points)
            ]
        )


def _propagate(
    h_fn: HamiltonianFunction,
    initial: CMat,
    start: CMat,
    grid: TimeGrid,
    reduce: Callable[[CMat], CMat2],
    reference: ReferenceFunction | None,
) -> PropagationResult:
    """
    Midpoint-exponential stepping ``U <- exp(-i H(t_mid) dt) U`` from ``U = start``.

    ``initial`` is conjugated by the accumulated unitary at every node and
    ``reduce`` maps the result to the recorded qubit state.
    """
    step = grid.step
    unitary = start
    states = [reduce(start @ initial @ dagger(start))]
    max_hermiticity = 0.0
    max_unitarity = unitarity_defect(start)
    for t_mid in grid.midpoints:
        hamiltonian = h_fn(float(t_mid))
        max_hermiticity = max(max_hermiticity, hermiticity_defect(hamiltonian))
        unitary = expm_skew(hamiltonian, step, float(t_mid)) @ unitary
        max_unitarity = max(max_unitarity, unitarity_defect(unitary))
        states.append(reduce(unitary @ initial @ dagger(unitary)))

    distance = None
    if reference is not None:
        distance = max(
            trace_distance(state, reference(float(t)))
            for state, t in zip(states, grid.points)
        )
    traces = np.array([np.trace(state).real for state in states])
    eigenvalues = np.array([np.linalg.eigvalsh(state).min() for state in states])
    result = PropagationResult(
        grid=grid,
        states=states,
        max_trace_distance=distance,
        max_hermiticity_defect=max_hermiticity,
        max_unitarity_defect=max_unitarity,
        max_trace_drift=float(np.max(np.abs(traces - 1))),
        min_eigenvalue=float(eigenvalues.min()),
    )
    logger.debug(
        "propagated %d steps of dt=%.3e: trace distance %s", grid.n, step, distance
    )
    return result


def propagate_closed(
    h_fn: Callable[[float], CMat2],
    rho0: CMat2,
    grid: TimeGrid,
    reference: ReferenceFunction | None = None,
) -> PropagationResult:
    return _propagate(
        h_fn, rho0, np.eye(2, dtype=np.complex128), grid, lambda state: state, reference
    )


def propagate_combined(
    h_ab_fn: Callable[[float], CMat4],
    kick: CMat4,
    rho0: CMat2,
    grid: TimeGrid,
    reference: ReferenceFunction | None = None,
) -> PropagationResult:
    """Kicks ``rho0 x |0><0|`` at ``t = 0`` and records the reduced 4x4 evolution"""
    return _propagate(
        h_ab_fn, kron(rho0, ANCILLA_GROUND), kick, grid, partial_trace_b, reference
    )


def extrapolated_states(
    propagate: Callable[[TimeGrid], PropagationResult], grid: TimeGrid
) -> list[CMat2]:
    """
    Richardson combination ``(4 rho_fine - rho_coarse) / 3`` on the nodes of ``grid``.

    The midpoint rule is symmetric, so its global error is even in ``dt`` and
    the combination is fourth order. ``propagate`` runs once on ``grid`` and
    once on ``grid.refined()``.
    """
    coarse = propagate(grid).states
    fine = propagate(grid.refined()).states[::2]
    return [(4 * right - left) / 3 for left, right in zip(coarse, fine)]
