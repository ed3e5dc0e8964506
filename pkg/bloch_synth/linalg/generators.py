from __future__ import annotations

import logging
from collections.abc import Callable
from math import inf
from typing import NamedTuple

from .matrices import CMat, dagger, hermiticity_defect, hermitize
from ..utils import derivative, richardson_derivative

logger = logging.getLogger(__name__)


class GeneratorSample(NamedTuple):
    matrix: CMat
    skew_defect: float  # ||H - H^dagger||_F before Hermitization


def generator_from_unitary(
    unitary: Callable[[float], CMat],
    t: float,
    h: float,
    lower: float = -inf,
    upper: float = inf,
    richardson: bool = False,
) -> GeneratorSample:
    """Finite-difference ``i U'(t) U(t)^dagger``, Hermitized"""
    differentiate = richardson_derivative if richardson else derivative
    raw = 1j * differentiate(unitary, t, h, lower, upper) @ dagger(unitary(t))
    defect = hermiticity_defect(raw)
    logger.debug("generator at t=%.6g: skew defect %.3e (h=%.3e)", t, defect, h)
    return GeneratorSample(hermitize(raw), defect)
