from __future__ import annotations

import re
from collections.abc import Callable, Mapping
from dataclasses import dataclass
from typing import Any

import sympy as sp

from ..base.errors import InvalidExpression
from ..unitary import AlphaGauge

TIME = sp.Symbol("t", real=True)
FUNCTIONS: dict[str, Any] = {
    "sin": sp.sin,
    "cos": sp.cos,
    "sqrt": sp.sqrt,
    "atan": sp.atan,
}
CONSTANTS: dict[str, Any] = {"pi": sp.pi}

TOKEN = re.compile(
    r"\s*(?:"
    r"(\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)"
    r"|([A-Za-z_]\w*)"
    r"|([-+*/^()])"
    r")"
)


def _identifiers(source: str) -> list[str]:
    """Splits ``source`` into tokens, rejecting any character outside the grammar"""
    names: list[str] = []
    position = 0
    stripped = source.rstrip()
    while position < len(stripped):
        match = TOKEN.match(stripped, position)
        if match is None:
            raise InvalidExpression(
                "unexpected character in expression",
                data={"expression": source, "position": position},
            )
        if match.group(2) is not None:
            names.append(match.group(2))
        position = match.end()
    return names


@dataclass(frozen=True)
class CompiledExpression:
    """Real function of ``t`` built from the restricted arithmetic grammar"""

    source: str
    expression: sp.Expr
    function: Callable[[float], Any]

    def __call__(self, t: float) -> float:
        return float(self.function(t))

    def derivative(self) -> CompiledExpression:
        derived = sp.diff(self.expression, TIME)
        return CompiledExpression(
            f"d/dt({self.source})", derived, sp.lambdify(TIME, derived, "numpy")
        )


def compile_expression(
    source: str, parameters: Mapping[str, float] | None = None
) -> CompiledExpression:
    """
    Parses ``source`` over ``t`` with ``+ - * / ^``, ``sin cos sqrt atan``,
    ``pi`` and the numeric ``parameters`` (for example ``omega``, ``theta0``).
    """
    parameters = dict(parameters or {})
    namespace: dict[str, Any] = {
        **FUNCTIONS,
        **CONSTANTS,
        **{name: sp.Float(value) for name, value in parameters.items()},
        "t": TIME,
    }
    unknown = sorted(set(_identifiers(source)) - namespace.keys())
    if unknown:
        raise InvalidExpression(
            "expression uses unknown names",
            data={"expression": source, "unknown": unknown},
        )
    try:
        expression = sp.sympify(source, locals=namespace, convert_xor=True)
    except (sp.SympifyError, SyntaxError, TypeError) as error:
        raise InvalidExpression(
            "expression does not parse", data={"expression": source}
        ) from error
    if not isinstance(expression, sp.Expr) or expression.free_symbols - {TIME}:
        raise InvalidExpression(
            "expression must be a real function of t", data={"expression": source}
        )
    function = sp.lambdify(TIME, expression, "numpy")
    return CompiledExpression(source, expression, function)


def alpha_from_expressions(
    alpha1_expr: str | None,
    alpha2_expr: str | None,
    parameters: Mapping[str, float] | None = None,
) -> AlphaGauge:
    """
    Gauge from two expressions, missing ones read as zero.

    Rates use central differences; ``NonzeroAlphaAtZero`` comes from ``AlphaGauge``.
    """
    functions = [
        compile_expression(source or "0", parameters)
        for source in (alpha1_expr, alpha2_expr)
    ]
    label = f"expr:{alpha1_expr or '0'}|{alpha2_expr or '0'}"
    return AlphaGauge(functions[0], functions[1], label=label)
