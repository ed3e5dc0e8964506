from .enums import TypeEnum
from .packing import remove_none, render_packed
from .quadrature import integrate, integrate_cumulative, require_simpson_nodes
from .stencils import derivative, richardson_derivative, second_derivative
