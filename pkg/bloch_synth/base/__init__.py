from .errors import (
    ConfigError,
    DegenerateInitialState,
    DomainError,
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
from .interfaces import GaugeMatrixSource
