from __future__ import annotations

import json
import logging
import sys
from argparse import ArgumentParser
from collections.abc import Sequence
from dataclasses import asdict
from pathlib import Path
from typing import Any

from .config import Command, Family, Format, JobConfig, WChoice
from .dumps import HamiltonianDump, dump_hamiltonians, write_kick
from ..base.errors import ConfigError, KindMismatch, SynthesisError
from ..core import DEFAULTS, TOLERANCES, configure_logging
from ..dilation import h_ab_numeric, preparation_kick
from ..geomphase import gamma_closed_form, geometric_phase, parallel_alphas
from ..path import PathKind, PathSpec, TimeGrid, spectral_init
from ..unitary import AlphaGauge, h_general
from ..verify import GaugeSet, SynthesisChoice, run_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_FAILED_CHECKS = 2


class JobRunner:
    """Executes one validated job and writes its outputs under ``output.dir``"""

    def __init__(self, config: JobConfig) -> None:
        self.config = config
        self.path: PathSpec = config.build_path()
        self.output_dir = config.output.dir
        try:
            self.output_dir.mkdir(parents=True, exist_ok=True)
        except OSError as error:
            raise ConfigError(
                "output directory cannot be created",
                data={"dir": str(self.output_dir), "reason": str(error)},
            ) from error

    @property
    def provenance(self) -> dict[str, Any]:
        return {
            "config": self.config.model_dump(mode="json"),
            "path": self.path.describe(),
            "defaults": DEFAULTS.as_dict(),
            "tolerances": asdict(TOLERANCES),
            "fd_step": self.fd_step,
        }

    @property
    def fd_step(self) -> float | None:
        return self.config.fd_step

    def grid(self, default_n: int, simpson: bool = False) -> TimeGrid:
        n = self.config.grid.n or default_n
        if simpson:
            return TimeGrid.for_simpson(n, self.path.tau)
        return TimeGrid(n, self.path.tau)

    def alpha_gauge(self) -> AlphaGauge:
        gauge = self.config.gauge
        if gauge.parallel:
            return parallel_alphas(
                self.path, TimeGrid.for_simpson(DEFAULTS.phase_nodes, self.path.tau)
            )
        return gauge.alpha(self.config.expression_parameters())

    def gauge_set(self) -> GaugeSet:
        gauge = self.config.gauge
        alpha = None
        if gauge.has_alpha:
            alpha = gauge.alpha(self.config.expression_parameters())
        w = gauge.w_gauge() if gauge.w is WChoice.SAMPLED else None
        return GaugeSet(alpha=alpha, w=w)

    def write_dump(self, dump: HamiltonianDump, stem: str) -> None:
        formats = self.config.output.formats
        if Format.CSV in formats:
            dump.write_csv(self.output_dir / f"{stem}.csv")
        if Format.JSON in formats:
            dump.write_json(self.output_dir / f"{stem}.json")

    def write_json(self, name: str, payload: dict[str, Any]) -> Path:
        target = self.output_dir / name
        target.write_text(json.dumps(payload, indent=2), encoding="utf-8")
        return target

    def synth_unitary(self) -> int:
        if self.path.kind is not PathKind.UNITARY:
            raise KindMismatch(
                "synth-unitary needs a constant-radius path",
                data={"family": self.path.family},
            )
        init = spectral_init(self.path)
        gauge = self.alpha_gauge()
        dump = dump_hamiltonians(
            lambda t: h_general(self.path, init, gauge, t, self.fd_step),
            self.grid(DEFAULTS.closed_steps),
            size=2,
            provenance={**self.provenance, "gauge": gauge.label},
        )
        self.write_dump(dump, "hamiltonian")
        return EXIT_OK

    def synth_open(self) -> int:
        gauges = self.gauge_set()
        w = gauges.w_or_identity()
        v = gauges.v_for(self.path)
        kick = preparation_kick(self.path, w, v)
        dump = dump_hamiltonians(
            lambda t: h_ab_numeric(
                self.path, w, v, t, self.fd_step, richardson=self.config.richardson
            ),
            self.grid(DEFAULTS.combined_steps),
            size=4,
            provenance={**self.provenance, "w": w.describe(), "v": v.describe()},
            skip_start=True,
        )
        self.write_dump(dump, "hamiltonian_ab")
        write_kick(kick, self.output_dir / "kick.csv")
        return EXIT_OK

    def geomphase(self) -> int:
        init = spectral_init(self.path)
        gauge = self.alpha_gauge()
        grid = self.grid(DEFAULTS.phase_nodes, simpson=True)
        result = geometric_phase(self.path, init, gauge, grid)
        payload: dict[str, Any] = {
            **result.as_dict(),
            "gauge": gauge.label,
            "provenance": self.provenance,
        }
        if self.path.family == Family.CIRCLE.to_string():
            payload["closed_form"] = gamma_closed_form(self.path.r0, self.path.theta0)
        self.write_json("phase.json", payload)
        sys.stdout.write(json.dumps({"gamma": result.gamma}) + "\n")
        return EXIT_OK

    def verify(self) -> int:
        gauge = self.config.gauge
        if gauge.parallel:
            choice = SynthesisChoice.PARALLEL
        elif self.path.kind is PathKind.UNITARY:
            choice = SynthesisChoice.UNITARY
        elif self._is_trivial_polar_shrink():
            choice = SynthesisChoice.SHRINK
        else:
            choice = SynthesisChoice.OPEN
        grid = None
        if self.config.grid.n is not None:
            grid = TimeGrid(self.config.grid.n, self.path.tau)
        report = run_report(
            self.path,
            choice,
            self.gauge_set(),
            grid,
            richardson=self.config.richardson,
        )
        report = report.with_provenance(config=self.config.model_dump(mode="json"))
        (self.output_dir / "report.json").write_text(report.to_json(), encoding="utf-8")
        if not report.overall_pass:
            logger.warning(
                "verification failed: %s",
                ", ".join(check.name for check in report.failed),
            )
            return EXIT_FAILED_CHECKS
        return EXIT_OK

    def _is_trivial_polar_shrink(self) -> bool:
        gauge = self.config.gauge
        return (
            self.path.family == Family.SHRINK.to_string()
            and self.path.theta0 == 0
            and not gauge.has_alpha
            and gauge.w is WChoice.IDENTITY
        )

    def run(self) -> int:
        handlers = {
            Command.SYNTH_UNITARY: self.synth_unitary,
            Command.SYNTH_OPEN: self.synth_open,
            Command.GEOMPHASE: self.geomphase,
            Command.VERIFY: self.verify,
        }
        return handlers[self.config.command]()


def report_error(error: SynthesisError) -> int:
    sys.stderr.write(json.dumps(error.to_packed()) + "\n")
    return error.code


def run(config: JobConfig) -> int:
    """Exit codes: 0 success, 1 invalid input or synthesis error, 2 failed checks"""
    try:
        return JobRunner(config).run()
    except SynthesisError as error:
        logger.debug("job failed", exc_info=error)
        return report_error(error)


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="bloch-synth",
        description="Hamiltonian synthesis for prescribed Bloch-vector paths",
    )
    parser.add_argument("job", type=Path, help="JSON job description")
    parser.add_argument("--debug", action="store_true", help="log at DEBUG level")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    arguments = build_parser().parse_args(argv)
    configure_logging(True if arguments.debug else None)
    try:
        config = JobConfig.from_file(arguments.job)
    except SynthesisError as error:
        return report_error(error)
    return run(config)


def entrypoint() -> None:
    sys.exit(main())
