from .domain import QParam, SeriesResult
from .series import log_product, sum_bilateral, sum_series
from .standard import (
    jackson_improper,
    jackson_integral,
    jackson_integral_ab,
    q_bracket,
    q_derivative,
    q_exp,
    q_exp_product,
    q_factorial,
    q_gamma,
    q_gamma_integral,
    q_pochhammer,
    q_pochhammer_inf,
    q_pochhammer_real,
)
from .symmetric import (
    sym_exp,
    sym_exp_first_zero,
    sym_exp_product,
    sym_gamma_tilde,
    sym_q_bracket,
    sym_q_derivative,
    sym_q_integral,
    sym_q_integral_improper,
    symmetric_brackets,
)
