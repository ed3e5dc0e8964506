from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from os import getenv

from typing_extensions import Self

ENV_OVERRIDES = {
    "fd_step_fraction": "BLOCH_SYNTH_FD_STEP",
    "closed_steps": "BLOCH_SYNTH_CLOSED_STEPS",
    "combined_steps": "BLOCH_SYNTH_COMBINED_STEPS",
}

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


@dataclass(frozen=True)
class Tolerances:
    """Every residual threshold the library checks against, in one table"""

    hermiticity: float = 1e-10  # relative Frobenius, input validation
    hermitian_output: float = 1e-12
    unitarity: float = 1e-12
    commutation: float = 1e-13
    gauge_commutation: float = 1e-10
    completeness: float = 1e-12
    reduced_state: float = 1e-12
    embedding: float = 1e-13
    su2: float = 1e-12
    constant_radius: float = 1e-12
    degenerate_radius: float = 1e-12
    alpha_at_zero: float = 1e-14
    domain_slack: float = 1e-12
    singular_rate: float = 1e-8
    undefined_phase: float = 1e-12
    branch_cut: float = 1e-3
    operator_form: float = 1e-10
    parallel_form: float = 1e-10
    parallel_transport: float = 1e-8
    phase_closed_form: float = 1e-4
    phase_gauge_independence: float = 1e-6
    pulse_reconstruction: float = 1e-12
    closed_realization: float = 1e-6
    combined_realization: float = 1e-5
    shrink_realization: float = 1e-6
    shrink_closed_form: float = 1e-6
    generator_skew: float = 1e-6
    gauge_invariance_closed: float = 1e-8
    gauge_invariance_combined: float = 1e-5
    density_trace: float = 1e-10
    density_positivity: float = 1e-9


TOLERANCES = Tolerances()


@dataclass(frozen=True)
class Defaults:
    fd_step_fraction: float = 1e-6
    combined_fd_step_fraction: float = 1e-5
    closed_steps: int = 2000
    combined_steps: int = 4000
    phase_nodes: int = 10_000

    @classmethod
    def from_env(cls) -> Self:
        overrides: dict[str, float | int] = {}
        base = cls()
        for field_name, variable in ENV_OVERRIDES.items():
            raw = getenv(variable, None)
            if raw is not None:
                overrides[field_name] = type(getattr(base, field_name))(raw)
        return cls(**overrides)

    def as_dict(self) -> dict[str, float | int]:
        return asdict(self)


DEFAULTS = Defaults.from_env()


def debug_from_env(default: bool = False) -> bool:
    return default != (getenv("DEBUG", None) is not None)


def configure_logging(debug: bool | None = None) -> None:
    if debug is None:
        debug = debug_from_env()
    logger = logging.getLogger("bloch_synth")
    logger.setLevel(logging.DEBUG if debug else logging.WARNING)
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
