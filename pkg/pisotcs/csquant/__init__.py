from .angle import angle_lower_symbol, d_coefficients, d_k, generic_F_lower_symbol, log_mid_factorials
from .domain import (
    CoherentState,
    Dispersions,
    FockModel,
    FourierSeries,
    LadderSet,
    OperatorLabel,
    PhotonStatistics,
    TruncatedOperator,
)
from .dynamics import evolve_lower_symbol, phase_density
from .model import build_model, coherent_state, log_probabilities
from .operators import (
    angle_factors,
    angle_operator,
    ladder_and_quadratures,
    lower_symbol,
    quantize_angular,
    quantize_radial,
)
from .statistics import boson_coefficients, dispersions, factorial_ratio, photon_statistics, probabilities
