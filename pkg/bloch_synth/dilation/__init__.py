from .gauges import (
    AlphaVSource,
    ArbitraryVSource,
    WGauge,
    check_v_source,
    v_arbitrary,
    v_identity,
    w_from_rotation,
    w_from_samples,
)
from .hamiltonians import (
    SHRINK_GENERATOR,
    check_pure_start,
    default_combined_step,
    h_ab_numeric,
    shrink_coefficient,
    shrink_h_ab,
    shrink_h_ab_for,
)
from .kraus import (
    AngleTerms,
    KrausPair,
    angle_terms,
    embedding_defect,
    kraus_from_dilation,
    kraus_tilde,
)
from .unitaries import (
    DilationSample,
    dilation_general,
    dilation_tilde,
    kraus_general,
    preparation_kick,
    reduced_state,
)
