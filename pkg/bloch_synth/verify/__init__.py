from .propagation import (
    PropagationResult,
    extrapolated_states,
    propagate_closed,
    propagate_combined,
)
from .report import (
    CheckEntry,
    GaugeSet,
    SynthesisChoice,
    VerificationReport,
    default_grid,
    measure,
    run_report,
)
