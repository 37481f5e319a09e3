from .__version__ import __version__
from .client import configure, get_config
from .csquant import (
    build_model,
    coherent_state,
    d_k,
    dispersions,
    evolve_lower_symbol,
    ladder_and_quadratures,
    phase_density,
    photon_statistics,
)
from .moment import generalized_factorial, moment_residual
from .pisot_core import DeformationSpec, pisot_sequence, table1
from .shared.errors import (
    DegenerateSpec,
    DivergentProduct,
    InvalidSpec,
    NonConvergent,
    OutOfDomain,
    PisotcsError,
)

__author__ = "pisotcs developers"
