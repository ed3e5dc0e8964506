from __future__ import annotations

from math import inf

import numpy as np
import numpy.typing as npt

from ..utils import derivative

Matrix = npt.NDArray[np.complex128]


class GaugeMatrixSource:
    """
    An interface to mark time-dependent 2x2 unitaries usable as dilation gauges.

    Implemented by the ``V`` sources and by ``WGauge``
    in :mod:`bloch_synth.dilation.gauges`
    """

    label: str = "custom"

    def matrix(self, t: float) -> Matrix:
        raise NotImplementedError

    def rate(
        self, t: float, h: float, lower: float = -inf, upper: float = inf
    ) -> Matrix:
        return derivative(self.matrix, t, h, lower, upper)

    def describe(self) -> str:
        return self.label
