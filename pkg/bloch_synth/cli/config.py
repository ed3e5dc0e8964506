from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator
from typing_extensions import Self

from .expressions import alpha_from_expressions, compile_expression
from ..base.errors import ConfigError
from ..dilation import WGauge, w_from_samples
from ..path import (
    PathSpec,
    family_circle,
    family_ellipse,
    family_shrink,
    load_csv_table,
    load_sampled_csv,
)
from ..unitary import AlphaGauge
from ..utils import TypeEnum

W_COLUMNS: tuple[str, ...] = ("t", "ax", "ay", "az")


class Command(TypeEnum):
    SYNTH_UNITARY = 0
    SYNTH_OPEN = 1
    GEOMPHASE = 2
    VERIFY = 3


class Family(TypeEnum):
    CIRCLE = 0
    ELLIPSE = 1
    SHRINK = 2
    SAMPLED = 3


class WChoice(TypeEnum):
    IDENTITY = 0
    SAMPLED = 1


class Format(TypeEnum):
    CSV = 0
    JSON = 1


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class PathConfig(StrictModel):
    family: Family
    params: dict[str, float | str] = Field(default_factory=dict)
    csv_path: Path | None = None

    @model_validator(mode="after")
    def check_csv(self) -> Self:
        if (self.family is Family.SAMPLED) != (self.csv_path is not None):
            raise ValueError(
                "csv_path is required for, and only for, the sampled family"
            )
        return self

    def numeric_params(self) -> dict[str, float]:
        result = {
            name: float(value)
            for name, value in self.params.items()
            if not isinstance(value, str)
        }
        if "cos_theta0" in result:
            result.setdefault("theta0", float(np.arccos(result["cos_theta0"])))
        return result

    def build(self, tau: float | None = None) -> PathSpec:
        """PathSpec of the configured family; ``tau`` from the grid section wins"""
        params = self.numeric_params()
        if tau is None:
            tau = params.get("tau")
        if self.family is Family.CIRCLE:
            self._require(params, "r0", "theta0", "omega")
            return family_circle(
                params["r0"],
                params["theta0"],
                params["omega"],
                tau=tau,
                phi0=params.get("phi0", 0.0),
            )
        if self.family is Family.ELLIPSE:
            self._require(params, "omega")
            return family_ellipse(params["omega"], tau=tau)
        if self.family is Family.SHRINK:
            return self._build_shrink(params, tau)
        path = load_sampled_csv(self.csv_path)
        if tau is not None and not np.isclose(tau, path.tau):
            raise ConfigError(
                "grid tau must match the sampled path's last time",
                data={"tau": tau, "csv_tau": path.tau},
            )
        return path

    def _build_shrink(self, params: dict[str, float], tau: float | None) -> PathSpec:
        source = self.params.get("r_expr")
        if not isinstance(source, str) or tau is None:
            raise ConfigError(
                "shrink family needs an r_expr string and a tau",
                data={"params": dict(self.params)},
            )
        radius = compile_expression(source, params)
        return family_shrink(
            radius, tau, r_dot=radius.derivative(), theta0=params.get("theta0", 0.0)
        )

    def _require(self, params: dict[str, float], *names: str) -> None:
        missing = [name for name in names if name not in params]
        if missing:
            raise ConfigError(
                f"{self.family.to_string()} family is missing parameters",
                data={"missing": missing},
            )


class GaugeConfig(StrictModel):
    alpha1_expr: str | None = None
    alpha2_expr: str | None = None
    parallel: bool = False
    w: WChoice = WChoice.IDENTITY
    w_csv_path: Path | None = None
    v: Literal["auto"] = "auto"

    @model_validator(mode="after")
    def check_exclusive(self) -> Self:
        if self.parallel and (self.alpha1_expr or self.alpha2_expr):
            raise ValueError("parallel=true forbids explicit alpha expressions")
        if (self.w is WChoice.SAMPLED) != (self.w_csv_path is not None):
            raise ValueError("w_csv_path is required for, and only for, w=sampled")
        return self

    @property
    def has_alpha(self) -> bool:
        return bool(self.alpha1_expr or self.alpha2_expr)

    def alpha(self, parameters: dict[str, float]) -> AlphaGauge:
        if not self.has_alpha:
            return AlphaGauge.zero()
        return alpha_from_expressions(self.alpha1_expr, self.alpha2_expr, parameters)

    def w_gauge(self) -> WGauge:
        if self.w is WChoice.IDENTITY:
            return WGauge.identity()
        table = load_csv_table(self.w_csv_path, W_COLUMNS)
        return w_from_samples(table, label="sampled")


class GridConfig(StrictModel):
    n: int | None = Field(None, gt=0)
    tau: float | None = Field(None, gt=0)


class OutputConfig(StrictModel):
    dir: Path = Path("output")
    formats: frozenset[Format] = frozenset({Format.CSV, Format.JSON})


class JobConfig(StrictModel):
    command: Command
    path: PathConfig
    gauge: GaugeConfig = GaugeConfig()
    grid: GridConfig = GridConfig()
    output: OutputConfig = OutputConfig()
    fd_step: float | None = Field(None, gt=0)
    richardson: bool = False

    @classmethod
    def from_data(cls, data: Any) -> Self:
        try:
            return cls.model_validate(data)
        except ValidationError as error:
            raise ConfigError(
                "job configuration is invalid", data=json.loads(error.json())
            ) from error

    @classmethod
    def from_file(cls, job_path: str | Path) -> Self:
        job_path = Path(job_path)
        try:
            data = json.loads(job_path.read_text(encoding="utf-8"))
        except (OSError, UnicodeDecodeError, json.JSONDecodeError) as error:
            raise ConfigError(
                "job file cannot be read as JSON",
                data={"file": str(job_path), "reason": str(error)},
            ) from error
        return cls.from_data(data)

    def build_path(self) -> PathSpec:
        return self.path.build(self.grid.tau)

    def expression_parameters(self) -> dict[str, float]:
        return self.path.numeric_params()
