from .config import (
    Command,
    Family,
    Format,
    GaugeConfig,
    GridConfig,
    JobConfig,
    OutputConfig,
    PathConfig,
    WChoice,
)
from .dumps import HamiltonianDump, dump_hamiltonians, entry_columns, write_kick
from .expressions import CompiledExpression, alpha_from_expressions, compile_expression
from .runner import EXIT_FAILED_CHECKS, EXIT_INVALID, EXIT_OK, JobRunner, main, run
