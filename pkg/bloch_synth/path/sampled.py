from __future__ import annotations

import logging
from pathlib import Path

import numpy as np

from .families import family_sampled
from .spec import PathSpec, TimeGrid
from ..base.errors import InvalidFamilyParameter

logger = logging.getLogger(__name__)

SAMPLED_COLUMNS: tuple[str, ...] = ("t", "r", "theta", "phi")


def sample_table(path: PathSpec, grid: TimeGrid) -> np.ndarray:
    return np.array([[t, *path.coordinates(t)] for t in grid.points])


def load_csv_table(csv_path: str | Path, columns: tuple[str, ...]) -> np.ndarray:
    """Numeric rows of a comma-separated file whose header must equal ``columns``"""
    csv_path = Path(csv_path)
    try:
        with csv_path.open(encoding="utf-8") as source:
            header = tuple(name.strip() for name in source.readline().split(","))
    except (OSError, UnicodeDecodeError) as error:
        raise InvalidFamilyParameter(
            "CSV file cannot be read",
            data={"file": str(csv_path), "reason": str(error)},
        ) from error
    if header != columns:
        raise InvalidFamilyParameter(
            f"CSV header must be {','.join(columns)}",
            data={"header": list(header), "file": str(csv_path)},
        )
    try:
        table = np.loadtxt(csv_path, delimiter=",", skiprows=1, ndmin=2)
    except ValueError as error:
        raise InvalidFamilyParameter(
            "CSV rows must be numeric", data={"file": str(csv_path)}
        ) from error
    logger.debug("loaded %d rows from %s", len(table), csv_path)
    return table


def load_sampled_csv(csv_path: str | Path) -> PathSpec:
    table = load_csv_table(csv_path, SAMPLED_COLUMNS)
    return family_sampled(table, source=str(csv_path))


def dump_family_csv(path: PathSpec, grid: TimeGrid, csv_path: str | Path) -> Path:
    csv_path = Path(csv_path)
    np.savetxt(
        csv_path,
        sample_table(path, grid),
        delimiter=",",
        header=",".join(SAMPLED_COLUMNS),
        comments="",
        fmt="%.17g",
    )
    return csv_path
