from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spec import PathSpec, density_matrix
from ..base.errors import DegenerateInitialState
from ..core import TOLERANCES
from ..linalg import CMat2

DELTAS: tuple[int, int] = (1, -1)


@dataclass(frozen=True)
class SpectralInit:
    """Orthogonal decomposition ``rho(0) = w1 rho1(0) + w2 rho2(0)``"""

    w1: float
    w2: float
    rho1_0: CMat2
    rho2_0: CMat2
    delta: tuple[int, int] = DELTAS

    @property
    def weights(self) -> tuple[float, float]:
        return self.w1, self.w2

    @property
    def projectors(self) -> tuple[CMat2, CMat2]:
        return self.rho1_0, self.rho2_0

    def reconstruct(self) -> CMat2:
        return self.w1 * self.rho1_0 + self.w2 * self.rho2_0


def initial_projector(theta0: float, phi0: float, delta: int) -> CMat2:
    return density_matrix(float(delta), theta0, phi0)


def spectral_init(path: PathSpec) -> SpectralInit:
    r0 = path.r0
    if r0 <= TOLERANCES.degenerate_radius:
        raise DegenerateInitialState(
            "orthogonal decomposition of rho(0) is not unique for r0 = 0",
            data={"r0": r0},
        )
    theta0, phi0 = path.theta0, path.phi0
    return SpectralInit(
        w1=(1 + r0) / 2,
        w2=(1 - r0) / 2,
        rho1_0=initial_projector(theta0, phi0, DELTAS[0]),
        rho2_0=initial_projector(theta0, phi0, DELTAS[1]),
    )


def projector_defects(init: SpectralInit) -> dict[str, float]:
    rho1, rho2 = init.projectors
    return {
        "completeness": float(np.linalg.norm(rho1 + rho2 - np.eye(2))),
        "idempotence": max(
            float(np.linalg.norm(rho @ rho - rho)) for rho in init.projectors
        ),
        "orthogonality": abs(complex(np.trace(rho1 @ rho2))),
    }
