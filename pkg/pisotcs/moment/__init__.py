from .domain import Density, DensityKind, DiscreteMeasure, MomentResidual, WeightDensity
from .factorials import (
    generalized_factorial,
    log_exact_factorial,
    log_generalized_factorial,
    moment_residual,
    radial_moment,
)
from .measures import (
    density_moment,
    g_density,
    g_moment,
    log_t_window,
    mellin_convolve,
    varpi_measure,
    varpi_moment,
    w_density,
    w_moment,
)
