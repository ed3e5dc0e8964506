from .gauges import AlphaGauge
from .pulses import PulseSample, pulse_decompose, pulse_schedule
from .synthesis import (
    gauge_rates,
    h_general,
    h_numeric,
    h_operator_form,
    require_unitary_kind,
    tilde_u,
    tilde_u_dot,
    u_general,
    v_gauge,
    v_gauge_dot,
)
