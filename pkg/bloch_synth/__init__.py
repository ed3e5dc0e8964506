from .base import (
    ConfigError,
    DegenerateInitialState,
    DomainError,
    GaugeMatrixSource,
    GaugeMismatch,
    InvalidExpression,
    InvalidFamilyParameter,
    KindMismatch,
    NonHermitianInput,
    NonzeroAlphaAtZero,
    SingularShrinkStart,
    SynthesisError,
    UndefinedPhase,
)
from .core import DEFAULTS, TOLERANCES, Defaults, Tolerances, configure_logging
from .dilation import (
    AlphaVSource,
    ArbitraryVSource,
    DilationSample,
    KrausPair,
    WGauge,
    dilation_general,
    dilation_tilde,
    h_ab_numeric,
    kraus_from_dilation,
    kraus_general,
    kraus_tilde,
    preparation_kick,
    reduced_state,
    shrink_h_ab,
    v_arbitrary,
    w_from_rotation,
)
from .geomphase import (
    PhaseResult,
    circle_h,
    connection_k,
    gamma_closed_form,
    geometric_phase,
    h_parallel,
    parallel_alphas,
    phase_distance_mod_pi,
    total_phase,
)
from .linalg import (
    CMat2,
    CMat4,
    bloch_vector,
    dagger,
    expm_skew,
    frobenius,
    hermitize,
    kron,
    partial_trace_b,
    trace_distance,
)
from .path import (
    PathKind,
    PathSpec,
    SpectralInit,
    TimeGrid,
    bloch_coordinates,
    dump_family_csv,
    family_circle,
    family_ellipse,
    family_sampled,
    family_shrink,
    load_sampled_csv,
    rho0,
    rho_of_t,
    spectral_init,
)
from .unitary import (
    AlphaGauge,
    PulseSample,
    h_general,
    h_numeric,
    h_operator_form,
    pulse_decompose,
    pulse_schedule,
    tilde_u,
    u_general,
    v_gauge,
)
from .verify import (
    CheckEntry,
    GaugeSet,
    PropagationResult,
    SynthesisChoice,
    VerificationReport,
    extrapolated_states,
    propagate_closed,
    propagate_combined,
    run_report,
)
