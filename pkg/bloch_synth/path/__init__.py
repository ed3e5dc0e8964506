from .families import family_circle, family_ellipse, family_sampled, family_shrink
from .sampled import (
    SAMPLED_COLUMNS,
    dump_family_csv,
    load_csv_table,
    load_sampled_csv,
    sample_table,
)
from .spec import (
    BlochCoordinates,
    PathDerivatives,
    PathKind,
    PathSpec,
    TimeGrid,
    bloch_coordinates,
    density_matrix,
    derivatives_at,
    rho0,
    rho_of_t,
)
from .spectral import (
    DELTAS,
    SpectralInit,
    initial_projector,
    projector_defects,
    spectral_init,
)
