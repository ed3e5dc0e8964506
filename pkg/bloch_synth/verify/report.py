from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, computed_field
from typing_extensions import Self

from .propagation import (
    PropagationResult,
    extrapolated_states,
    propagate_closed,
    propagate_combined,
)
from ..base.errors import KindMismatch, SynthesisError
from ..base.interfaces import GaugeMatrixSource
from ..core import DEFAULTS, TOLERANCES
from ..dilation import (
    AlphaVSource,
    WGauge,
    check_pure_start,
    default_combined_step,
    dilation_general,
    embedding_defect,
    h_ab_numeric,
    kraus_general,
    preparation_kick,
    reduced_state,
    shrink_h_ab_for,
    v_identity,
)
from ..geomphase import (
    connection_residual,
    gamma_closed_form,
    geometric_phase,
    h_parallel,
    parallel_alphas,
    phase_distance_mod_pi,
)
from ..linalg import (
    IDENTITY2,
    CMat,
    bloch_vector,
    commutator,
    dagger,
    frobenius,
    generator_from_unitary,
    hermiticity_defect,
    kron,
    trace_distance,
    unitarity_defect,
)
from ..path import (
    PathKind,
    PathSpec,
    SpectralInit,
    TimeGrid,
    rho0,
    rho_of_t,
    spectral_init,
)
from ..unitary import (
    AlphaGauge,
    h_general,
    h_operator_form,
    pulse_decompose,
    u_general,
    v_gauge,
)
from ..utils import TypeEnum

logger = logging.getLogger(__name__)

ANALYTIC_SAMPLES = 101
SKEW_SAMPLES = 11


class SynthesisChoice(TypeEnum):
    UNITARY = 0
    PARALLEL = 1
    OPEN = 2
    SHRINK = 3


class CheckEntry(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    name: str
    residual: float | None
    tolerance: float
    passed: bool = Field(alias="pass")
    error: str | None = None
    message: str | None = None


class VerificationReport(BaseModel):
    """Append-only list of checks; ``with_check`` returns a new report"""

    model_config = ConfigDict(frozen=True)

    checks: tuple[CheckEntry, ...] = ()
    provenance: dict[str, Any] = Field(default_factory=dict)

    @computed_field  # type: ignore[misc]
    @property
    def overall_pass(self) -> bool:
        return all(check.passed for check in self.checks)

    def with_check(self, entry: CheckEntry) -> Self:
        return self.model_copy(update={"checks": (*self.checks, entry)})

    def with_provenance(self, **provenance: Any) -> Self:
        return self.model_copy(update={"provenance": {**self.provenance, **provenance}})

    def get(self, name: str) -> CheckEntry | None:
        return next((check for check in self.checks if check.name == name), None)

    @property
    def failed(self) -> list[CheckEntry]:
        return [check for check in self.checks if not check.passed]

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)


def measure(name: str, tolerance: float, compute: Callable[[], float]) -> CheckEntry:
    """Runs one residual computation; errors become a failed entry"""
    try:
        residual = float(compute())
    except (SynthesisError, ValueError) as error:
        logger.debug("check %s raised %r", name, error)
        kind = error.kind if isinstance(error, SynthesisError) else type(error).__name__
        return CheckEntry(
            name=name,
            residual=None,
            tolerance=tolerance,
            passed=False,
            error=kind,
            message=str(error),
        )
    return CheckEntry(
        name=name,
        residual=residual,
        tolerance=tolerance,
        passed=bool(residual <= tolerance),
    )


@dataclass(frozen=True)
class GaugeSet:
    """
    Gauges for one synthesis. ``alternate`` is the second gauge the
    invariance check compares against (trivial gauges when omitted).
    """

    alpha: AlphaGauge | None = None
    w: WGauge | None = None
    v: GaugeMatrixSource | None = None
    alternate: GaugeSet | None = None

    def alpha_or_zero(self) -> AlphaGauge:
        return self.alpha if self.alpha is not None else AlphaGauge.zero()

    def w_or_identity(self) -> WGauge:
        return self.w if self.w is not None else WGauge.identity()

    def v_for(self, path: PathSpec) -> GaugeMatrixSource:
        if self.v is not None:
            return self.v
        if path.r0 > TOLERANCES.degenerate_radius:
            return AlphaVSource(spectral_init(path), self.alpha_or_zero())
        return v_identity()

    def alternate_or_trivial(self) -> GaugeSet:
        return self.alternate if self.alternate is not None else GaugeSet()

    def describe(self, path: PathSpec) -> dict[str, Any]:
        result: dict[str, Any] = {"alpha": self.alpha_or_zero().label}
        if path.kind is PathKind.OPEN:
            result["w"] = self.w_or_identity().describe()
            result["v"] = self.v_for(path).describe()
        return result


class _Battery:
    def __init__(self, report: VerificationReport) -> None:
        self.report = report

    def check(self, name: str, tolerance: float, compute: Callable[[], float]) -> None:
        self.record(measure(name, tolerance, compute))

    def record(self, entry: CheckEntry) -> None:
        self.report = self.report.with_check(entry)


def _sample_points(path: PathSpec) -> np.ndarray:
    return np.linspace(0.0, path.tau, ANALYTIC_SAMPLES)


def _perturbed(
    h_fn: Callable[[float], CMat], perturbation: CMat | None, size: int
) -> Callable[[float], CMat]:
    if perturbation is None:
        return h_fn
    extra = perturbation
    if perturbation.shape != (size, size):
        extra = kron(perturbation, IDENTITY2)
    return lambda t: h_fn(t) + extra


def _density_checks(battery: _Battery, result: PropagationResult) -> None:
    battery.check(
        "density-trace", TOLERANCES.density_trace, lambda: result.max_trace_drift
    )
    battery.check(
        "density-positivity",
        TOLERANCES.density_positivity,
        lambda: max(0.0, -result.min_eigenvalue),
    )


def _trajectory_gap(first: list[CMat], second: list[CMat]) -> float:
    return max(trace_distance(left, right) for left, right in zip(first, second))


def _unitary_battery(
    battery: _Battery,
    path: PathSpec,
    choice: SynthesisChoice,
    gauges: GaugeSet,
    grid: TimeGrid,
    perturbation: CMat | None,
) -> None:
    if path.kind is not PathKind.UNITARY:
        mismatch = KindMismatch("unitary synthesis needs a constant-radius path")
        battery.record(_failure("synthesis", mismatch))
        return
    try:
        init = spectral_init(path)
        phase_grid = TimeGrid.for_simpson(DEFAULTS.phase_nodes, path.tau)
        if choice is SynthesisChoice.PARALLEL:
            gauge = parallel_alphas(path, phase_grid)
        else:
            gauge = gauges.alpha_or_zero()
    except SynthesisError as error:
        battery.record(_failure("synthesis", error))
        return

    points = _sample_points(path)
    initial = rho0(path)

    def h_fn(t: float) -> CMat:
        return h_general(path, init, gauge, t)

    def max_over(function: Callable[[float], float]) -> float:
        return max(function(float(t)) for t in points)

    battery.check(
        "hermiticity",
        TOLERANCES.hermitian_output,
        lambda: max_over(lambda t: hermiticity_defect(h_fn(t))),
    )
    battery.check(
        "unitarity",
        TOLERANCES.unitarity,
        lambda: max_over(lambda t: unitarity_defect(u_general(path, init, gauge, t))),
    )
    battery.check(
        "v-commutation",
        TOLERANCES.commutation,
        lambda: max_over(
            lambda t: frobenius(commutator(v_gauge(init, gauge, t), initial))
        ),
    )
    battery.check(
        "conjugation",
        TOLERANCES.reduced_state,
        lambda: max_over(lambda t: _conjugation_defect(path, init, gauge, t)),
    )
    battery.check(
        "operator-form",
        TOLERANCES.operator_form,
        lambda: max_over(
            lambda t: frobenius(h_fn(t) - h_operator_form(path, init, gauge, t))
        ),
    )
    battery.check(
        "pulse-reconstruction",
        TOLERANCES.pulse_reconstruction,
        lambda: max_over(
            lambda t: frobenius(pulse_decompose(h_fn(t), t).hamiltonian() - h_fn(t))
        ),
    )
    if choice is SynthesisChoice.PARALLEL:
        battery.check(
            "parallel-transport",
            TOLERANCES.parallel_transport,
            lambda: connection_residual(path, init, gauge, points),
        )
        battery.check(
            "parallel-form",
            TOLERANCES.parallel_form,
            lambda: max_over(lambda t: frobenius(h_fn(t) - h_parallel(path, t))),
        )

    realized: list[PropagationResult] = []

    def realization() -> float:
        result = propagate_closed(
            _perturbed(h_fn, perturbation, 2), initial, grid, _reference(path)
        )
        realized.append(result)
        return result.max_trace_distance

    alternate = gauges.alternate_or_trivial().alpha_or_zero()

    def closed_states(alpha: AlphaGauge) -> list[CMat]:
        return extrapolated_states(
            lambda fine: propagate_closed(
                lambda t: h_general(path, init, alpha, t), initial, fine
            ),
            grid,
        )

    def gauge_invariance() -> float:
        return _trajectory_gap(closed_states(gauge), closed_states(alternate))

    battery.check("realization", TOLERANCES.closed_realization, realization)
    if realized:
        _density_checks(battery, realized[0])
        battery.check(
            "gauge-invariance", TOLERANCES.gauge_invariance_closed, gauge_invariance
        )

    _phase_checks(battery, path, init, gauge, alternate, phase_grid)


def _reference(path: PathSpec) -> Callable[[float], CMat]:
    return lambda t: rho_of_t(path, t)


def _conjugation_defect(
    path: PathSpec, init: SpectralInit, gauge: AlphaGauge, t: float
) -> float:
    unitary = u_general(path, init, gauge, t)
    return frobenius(unitary @ rho0(path) @ dagger(unitary) - rho_of_t(path, t))


def _is_full_circle(path: PathSpec) -> bool:
    if path.family != "circle":
        return False
    return bool(np.isclose(abs(path.params["omega"] * path.tau), 2 * np.pi))


def _phase_gap(first: float, second: float) -> float:
    return abs(float(np.angle(np.exp(1j * (first - second)))))


def _phase_checks(
    battery: _Battery,
    path: PathSpec,
    init: SpectralInit,
    gauge: AlphaGauge,
    alternate: AlphaGauge,
    phase_grid: TimeGrid,
) -> None:
    try:
        result = geometric_phase(path, init, gauge, phase_grid)
    except SynthesisError as error:
        battery.record(_failure("geometric-phase", error))
        return
    battery.report = battery.report.with_provenance(phase=result.as_dict())
    if _is_full_circle(path):
        battery.check(
            "phase-closed-form",
            TOLERANCES.phase_closed_form,
            lambda: phase_distance_mod_pi(
                result.gamma, gamma_closed_form(path.r0, path.theta0)
            ),
        )
    battery.check(
        "phase-gauge-independence",
        TOLERANCES.phase_gauge_independence,
        lambda: _phase_gap(
            geometric_phase(path, init, alternate, phase_grid).gamma, result.gamma
        ),
    )


def _open_battery(
    battery: _Battery,
    path: PathSpec,
    gauges: GaugeSet,
    grid: TimeGrid,
    perturbation: CMat | None,
    richardson: bool,
) -> None:
    try:
        check_pure_start(path)
        w = gauges.w_or_identity()
        v = gauges.v_for(path)
        kick = preparation_kick(path, w, v)
    except SynthesisError as error:
        battery.record(_failure("synthesis", error))
        return

    points = _sample_points(path)
    initial = rho0(path)

    def max_over(function: Callable[[float], float]) -> float:
        return max(function(float(t)) for t in points)

    battery.check(
        "completeness",
        TOLERANCES.completeness,
        lambda: max_over(lambda t: kraus_general(path, w, v, t).completeness_defect()),
    )
    battery.check(
        "kraus-reproduction",
        TOLERANCES.reduced_state,
        lambda: max_over(
            lambda t: frobenius(
                kraus_general(path, w, v, t).apply(initial) - rho_of_t(path, t)
            )
        ),
    )
    battery.check(
        "dilation-unitarity",
        TOLERANCES.unitarity,
        lambda: max_over(lambda t: dilation_general(path, w, v, t).unitarity_defect()),
    )
    battery.check(
        "embedding",
        TOLERANCES.embedding,
        lambda: max_over(
            lambda t: embedding_defect(
                kraus_general(path, w, v, t), dilation_general(path, w, v, t).u_ab
            )
        ),
    )
    battery.check(
        "reduced-dynamics",
        TOLERANCES.reduced_state,
        lambda: max_over(
            lambda t: frobenius(
                reduced_state(dilation_general(path, w, v, t).u_ab, initial)
                - rho_of_t(path, t)
            )
        ),
    )
    battery.check(
        "kick-reduced-state",
        TOLERANCES.reduced_state,
        lambda: frobenius(reduced_state(kick, initial) - initial),
    )
    step = default_combined_step(path)
    battery.check(
        "generator-skew",
        TOLERANCES.generator_skew,
        lambda: max(
            generator_from_unitary(
                lambda s: dilation_general(path, w, v, s).u_ab,
                float(t),
                step,
                0.0,
                path.tau,
                richardson=richardson,
            ).skew_defect
            for t in np.linspace(0.0, path.tau, SKEW_SAMPLES)
        ),
    )

    realized: list[PropagationResult] = []

    def h_fn(t: float) -> CMat:
        return h_ab_numeric(path, w, v, t, richardson=richardson)

    def realization() -> float:
        result = propagate_combined(
            _perturbed(h_fn, perturbation, 4), kick, initial, grid, _reference(path)
        )
        realized.append(result)
        return result.max_trace_distance

    battery.check("realization", TOLERANCES.combined_realization, realization)
    if not realized:
        return
    _density_checks(battery, realized[0])

    def combined_states(gauge_set: GaugeSet) -> list[CMat]:
        gauge_w, gauge_v = gauge_set.w_or_identity(), gauge_set.v_for(path)
        gauge_kick = preparation_kick(path, gauge_w, gauge_v)
        return extrapolated_states(
            lambda fine: propagate_combined(
                lambda t: h_ab_numeric(
                    path, gauge_w, gauge_v, t, richardson=richardson
                ),
                gauge_kick,
                initial,
                fine,
            ),
            grid,
        )

    def gauge_invariance() -> float:
        alternate = gauges.alternate_or_trivial()
        return _trajectory_gap(combined_states(gauges), combined_states(alternate))

    battery.check(
        "gauge-invariance", TOLERANCES.gauge_invariance_combined, gauge_invariance
    )


def _shrink_battery(
    battery: _Battery,
    path: PathSpec,
    grid: TimeGrid,
    perturbation: CMat | None,
    richardson: bool,
) -> None:
    w, v = WGauge.identity(), v_identity()
    try:
        check_pure_start(path)
        shrink_h_ab_for(path, 0.0)
        kick = preparation_kick(path, w, v)
    except SynthesisError as error:
        battery.record(_failure("synthesis", error))
        return

    interior = np.linspace(0.0, path.tau, ANALYTIC_SAMPLES)[1:-1]
    battery.check(
        "closed-form-vs-numeric",
        TOLERANCES.shrink_closed_form,
        lambda: max(
            frobenius(
                shrink_h_ab_for(path, float(t))
                - h_ab_numeric(path, w, v, float(t), richardson=richardson)
            )
            for t in interior
        ),
    )
    battery.check(
        "hermiticity",
        TOLERANCES.hermitian_output,
        lambda: max(
            hermiticity_defect(shrink_h_ab_for(path, float(t))) for t in interior
        ),
    )

    initial = rho0(path)
    realized: list[PropagationResult] = []

    def realization() -> float:
        result = propagate_combined(
            _perturbed(lambda t: shrink_h_ab_for(path, t), perturbation, 4),
            kick,
            initial,
            grid,
            _reference(path),
        )
        realized.append(result)
        return result.max_trace_distance

    battery.check("realization", TOLERANCES.shrink_realization, realization)
    if not realized:
        return
    _density_checks(battery, realized[0])
    battery.check(
        "bloch-vector",
        TOLERANCES.shrink_realization,
        lambda: max(
            float(np.max(np.abs(bloch_vector(state) - [0.0, 0.0, path.r(float(t))])))
            for state, t in zip(realized[0].states, grid.points)
        ),
    )


def _failure(name: str, error: SynthesisError) -> CheckEntry:
    return CheckEntry(
        name=name,
        residual=None,
        tolerance=0.0,
        passed=False,
        error=error.kind,
        message=error.message,
    )


def default_grid(path: PathSpec, choice: SynthesisChoice) -> TimeGrid:
    if choice in {SynthesisChoice.UNITARY, SynthesisChoice.PARALLEL}:
        return TimeGrid(DEFAULTS.closed_steps, path.tau)
    return TimeGrid(DEFAULTS.combined_steps, path.tau)


def run_report(
    path: PathSpec,
    choice: SynthesisChoice,
    gauges: GaugeSet | None = None,
    grid: TimeGrid | None = None,
    perturbation: CMat | None = None,
    richardson: bool = False,
) -> VerificationReport:
    """
    Runs every check that applies to ``choice`` and folds them into one report.

    Synthesis errors and failed sub-checks become failed entries; the report
    itself is always returned. ``perturbation`` is added to the synthesized
    Hamiltonian before propagation (fault injection). ``richardson`` switches
    the 4x4 finite differences of open syntheses to Richardson extrapolation.
    """
    if gauges is None:
        gauges = GaugeSet()
    if grid is None:
        grid = default_grid(path, choice)
    report = VerificationReport(
        provenance={
            "path": path.describe(),
            "choice": choice.to_string(),
            "gauges": gauges.describe(path),
            "grid": {"n": grid.n, "tau": grid.tau},
            "defaults": DEFAULTS.as_dict(),
            "perturbation": None if perturbation is None else frobenius(perturbation),
            "richardson": richardson,
        }
    )
    battery = _Battery(report)
    if choice in {SynthesisChoice.UNITARY, SynthesisChoice.PARALLEL}:
        _unitary_battery(battery, path, choice, gauges, grid, perturbation)
    elif choice is SynthesisChoice.OPEN:
        _open_battery(battery, path, gauges, grid, perturbation, richardson)
    else:
        _shrink_battery(battery, path, grid, perturbation, richardson)
    logger.debug(
        "report for %s (%s): %d checks, %d failed",
        path.family,
        choice.to_string(),
        len(battery.report.checks),
        len(battery.report.failed),
    )
    return battery.report
