from __future__ import annotations

from dataclasses import dataclass
from math import inf

from ..base.errors import NonzeroAlphaAtZero
from ..core import TOLERANCES
from ..path.spec import ScalarFunction
from ..utils import derivative


def _zero(_: float) -> float:
    return 0.0


@dataclass(frozen=True)
class AlphaGauge:
    """
    Phases ``alpha_k(t)`` of ``V(t) = sum_k exp(i alpha_k) rho_k(0)``.

    Both phases vanish at ``t = 0``. Missing rates are taken by finite
    differences with the same stencils as path derivatives.
    """

    alpha1: ScalarFunction
    alpha2: ScalarFunction
    alpha1_dot: ScalarFunction | None = None
    alpha2_dot: ScalarFunction | None = None
    label: str = "custom"

    def __post_init__(self) -> None:
        for index, alpha in enumerate((self.alpha1, self.alpha2), start=1):
            value = float(alpha(0.0))
            if abs(value) > TOLERANCES.alpha_at_zero:
                raise NonzeroAlphaAtZero(
                    f"alpha{index}(0) must vanish",
                    data={"alpha": index, "value": value},
                )

    @classmethod
    def zero(cls) -> AlphaGauge:
        return cls(_zero, _zero, _zero, _zero, label="zero")

    @property
    def analytic(self) -> bool:
        return self.alpha1_dot is not None and self.alpha2_dot is not None

    def values(self, t: float) -> tuple[float, float]:
        return float(self.alpha1(t)), float(self.alpha2(t))

    def rates(
        self, t: float, h: float, lower: float = -inf, upper: float = inf
    ) -> tuple[float, float]:
        return (
            self._rate(self.alpha1, self.alpha1_dot, t, h, lower, upper),
            self._rate(self.alpha2, self.alpha2_dot, t, h, lower, upper),
        )

    @staticmethod
    def _rate(
        alpha: ScalarFunction,
        alpha_dot: ScalarFunction | None,
        t: float,
        h: float,
        lower: float,
        upper: float,
    ) -> float:
        if alpha_dot is not None:
            return float(alpha_dot(t))
        return float(derivative(alpha, t, h, lower, upper))
