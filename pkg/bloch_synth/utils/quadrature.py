from __future__ import annotations

import numpy as np
from scipy.integrate import cumulative_simpson, simpson


def require_simpson_nodes(points: np.ndarray) -> None:
    if len(points) < 3 or len(points) % 2 == 0:
        raise ValueError(
            f"Simpson quadrature needs an odd node count >= 3, got {len(points)}"
        )


def integrate(values: np.ndarray, points: np.ndarray) -> complex | float:
    require_simpson_nodes(points)
    if np.iscomplexobj(values):
        return complex(
            simpson(values.real, x=points) + 1j * simpson(values.imag, x=points)
        )
    return float(simpson(values, x=points))


def integrate_cumulative(values: np.ndarray, points: np.ndarray) -> np.ndarray:
    require_simpson_nodes(points)
    return cumulative_simpson(values, x=points, initial=0)
