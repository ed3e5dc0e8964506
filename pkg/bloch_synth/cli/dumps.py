from __future__ import annotations

import logging
from collections.abc import Callable
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import BaseModel, Field

from ..core import TOLERANCES
from ..linalg import CMat, hermiticity_defect
from ..path import TimeGrid
from ..unitary import pulse_decompose

logger = logging.getLogger(__name__)

PULSE_COLUMNS: tuple[str, ...] = ("B0", "Bx", "By", "Bz")


def entry_columns(size: int, prefix: str = "h") -> list[str]:
    """``h11_re, h11_im, h12_re, ...`` in row-major order"""
    return [
        f"{prefix}{row + 1}{column + 1}_{part}"
        for row in range(size)
        for column in range(size)
        for part in ("re", "im")
    ]


def _entries(matrix: CMat) -> list[float]:
    flat = np.asarray(matrix).ravel()
    return [float(value) for entry in flat for value in (entry.real, entry.imag)]


class HamiltonianDump(BaseModel):
    """Hamiltonian samples, one row per grid node"""

    columns: list[str]
    rows: list[list[float]]
    hermiticity_residual: list[float]
    provenance: dict[str, Any] = Field(default_factory=dict)

    @property
    def max_hermiticity_residual(self) -> float:
        return max(self.hermiticity_residual, default=0.0)

    def write_csv(self, csv_path: Path) -> Path:
        np.savetxt(
            csv_path,
            np.array(self.rows),
            delimiter=",",
            header=",".join(self.columns),
            comments="",
            fmt="%.17g",
        )
        return csv_path

    def write_json(self, json_path: Path) -> Path:
        json_path.write_text(self.model_dump_json(indent=2), encoding="utf-8")
        return json_path


def dump_hamiltonians(
    h_fn: Callable[[float], CMat],
    grid: TimeGrid,
    size: int,
    provenance: dict[str, Any] | None = None,
    skip_start: bool = False,
) -> HamiltonianDump:
    """
    Samples ``h_fn`` at the grid nodes; 2x2 rows also carry the pulse columns.

    ``skip_start`` leaves out ``t = 0``, where an open synthesis is a kick.
    """
    columns = ["t", *entry_columns(size)]
    if size == 2:
        columns.extend(PULSE_COLUMNS)
    rows: list[list[float]] = []
    residuals: list[float] = []
    points = grid.points[1:] if skip_start else grid.points
    for t in points:
        hamiltonian = h_fn(float(t))
        row = [float(t), *_entries(hamiltonian)]
        if size == 2:
            pulse = pulse_decompose(hamiltonian, float(t))
            row.extend(pulse.as_row()[1:])
        rows.append(row)
        residuals.append(hermiticity_defect(hamiltonian))
    dump = HamiltonianDump(
        columns=columns,
        rows=rows,
        hermiticity_residual=residuals,
        provenance=provenance or {},
    )
    if dump.max_hermiticity_residual > TOLERANCES.hermitian_output:
        logger.warning(
            "Hamiltonian samples have Hermiticity residual %.3e",
            dump.max_hermiticity_residual,
        )
    return dump


def write_kick(kick: CMat, csv_path: Path) -> Path:
    """Preparation kick as a single row of ``k11_re, k11_im, ..., k44_im``"""
    np.savetxt(
        csv_path,
        np.array([_entries(kick)]),
        delimiter=",",
        header=",".join(entry_columns(4, prefix="k")),
        comments="",
        fmt="%.17g",
    )
    return csv_path
