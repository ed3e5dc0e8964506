from .connection import connection_k, connection_residual, u_dot
from .parallel import parallel_alphas, parallel_rate
from .phase import (
    PhaseResult,
    gamma_closed_form,
    geometric_phase,
    phase_distance_mod_pi,
    total_phase,
)
from .special import circle_h, h_parallel
