from __future__ import annotations

from typing import Any

import numpy as np
import numpy.typing as npt
from pydantic_marshals.contains import assert_contains

from .report import VerificationReport
from ..linalg import CMat, frobenius, hermiticity_defect, unitarity_defect


def assert_close(
    actual: npt.ArrayLike, expected: npt.ArrayLike, tolerance: float = 1e-12
) -> float:
    residual = frobenius(np.asarray(actual) - np.asarray(expected))
    assert residual <= tolerance, f"residual {residual:.3e} > {tolerance:.1e}"
    return residual


def assert_hermitian(matrix: CMat, tolerance: float = 1e-12) -> None:
    defect = hermiticity_defect(matrix)
    assert defect <= tolerance, f"Hermiticity defect {defect:.3e} > {tolerance:.1e}"


def assert_unitary(matrix: CMat, tolerance: float = 1e-12) -> None:
    defect = unitarity_defect(matrix)
    assert defect <= tolerance, f"unitarity defect {defect:.3e} > {tolerance:.1e}"


def assert_density_matrix(rho: CMat, tolerance: float = 1e-9) -> None:
    assert_hermitian(rho, tolerance)
    trace = complex(np.trace(rho))
    assert abs(trace - 1) <= tolerance, f"trace {trace} != 1"
    smallest = float(np.linalg.eigvalsh((rho + rho.conj().T) / 2).min())
    assert smallest >= -tolerance, f"negative eigenvalue {smallest:.3e}"


def assert_report(
    report: VerificationReport,
    overall_pass: bool = True,
    expected_json: Any = None,
) -> dict:
    data = report.model_dump(mode="json", by_alias=True)
    failed = [check.name for check in report.failed]
    assert report.overall_pass is overall_pass, failed
    if expected_json is not None:
        assert_contains(data, expected_json)
    return data
