"""
Generalized deformed factorials x_nu! and moment-problem residuals.
"""

import math
from typing import Callable, Optional

import numpy as np
from scipy import integrate, special

from pisotcs.client.config import get_config
from pisotcs.qcalc import symmetric_brackets
from pisotcs.shared.errors import NonConvergent, OutOfDomain
from pisotcs.shared.utils.logging import get_component_logger

from .domain import MomentResidual
from .measures import density_moment, log_t_window, varpi_measure, w_density

logger = get_component_logger("moment")


def _fold(q: float) -> float:
    if q <= 0:
        raise OutOfDomain(f"q must be positive, got {q}")
    return 1.0 / q if q > 1.0 else q


def log_generalized_factorial(q: float, nu: float) -> float:
    """
    ln x_nu! = -nu(nu+1)/2 ln q + ln sum_j t_j^nu weight_j.

    Uses the multiplicativity of Mellin-convolution moments: the g_q
    moment is q^(-nu(nu+1)/2) and the varpi_q moment is a finite sum.
    q = 1 gives ln Gamma(nu + 1).
    """
    if nu < 0:
        raise OutOfDomain(f"nu must be nonnegative, got {nu}")
    q = _fold(q)
    if q == 1.0:
        return float(special.gammaln(nu + 1.0))

    measure = varpi_measure(q)
    log_terms = nu * np.log(measure.atoms) + np.log(measure.weights)
    return float(-0.5 * nu * (nu + 1.0) * math.log(q) + special.logsumexp(log_terms))


def generalized_factorial(q: float, nu: float) -> float:
    """x_nu! for real nu >= 0; equals the exact x_n! at integers and Gamma(nu+1) at q = 1."""
    return math.exp(log_generalized_factorial(q, nu))


def log_exact_factorial(q: float, n: int) -> float:
    """ln x_n! from the spectrum (exact integers for Pisot q)."""
    total = 0.0
    for k, bracket in zip(range(n), symmetric_brackets(_fold(q))):
        total += math.log(bracket)
    return total


def radial_moment(
    q: float,
    f: Callable[[float], float],
    n: int,
    log_norm: Optional[float] = None,
    shift: float = 4.0,
) -> float:
    """
    (1/x_n!) int f(t) t^n w_q(t) dt.

    For q = 1 the weight is e^-t. log_norm defaults to ln x_n! from the
    spectrum; the quadrature window is widened by `shift` in ln t to
    accommodate growth of f.

    Raises:
        NonConvergent: If the quadrature misses its tolerance
    """
    q = _fold(q)
    if log_norm is None:
        log_norm = log_exact_factorial(q, n)

    if q == 1.0:
        return _classical_radial_moment(f, n, log_norm)

    u_lo, u_hi, sigma = log_t_window(q, n, shift=shift)

    def integrand(u: float) -> float:
        t = math.exp(u)
        return f(t) * math.exp((n + 1.0) * u - log_norm) * w_density(q, t)

    return density_moment(integrand, u_lo, u_hi, sigma, label=f"radial moment n={n}")


def _classical_radial_moment(f: Callable[[float], float], n: int, log_norm: float) -> float:
    quad_tol = get_config().quad_tol
    hi = n + 80.0 + 15.0 * math.sqrt(n + 1.0)

    def integrand(t: float) -> float:
        if t == 0.0:
            return f(t) * math.exp(-log_norm) if n == 0 else 0.0
        return f(t) * math.exp(n * math.log(t) - t - log_norm)

    value, abserr = integrate.quad(integrand, 0.0, hi, points=[float(n)] if n > 0 else None,
                                   epsabs=0.0, epsrel=quad_tol, limit=200)
    if abserr > 1e3 * quad_tol * max(abs(value), 1e-300):
        logger.error(f"classical radial moment n={n}: error estimate {abserr:.3e}")
        raise NonConvergent(f"classical radial moment n={n}: error estimate {abserr:.3e}")
    return value


def moment_residual(q: float, n: int) -> MomentResidual:
    """
    Relative residuals of x_n! = int t^n w_q(t) dt.

    quadrature: direct adaptive quadrature of w_q.
    factorized: the generalized-factorial (Mellin moment) formula.
    """
    if n < 0:
        raise OutOfDomain(f"n must be nonnegative, got {n}")
    log_exact = log_exact_factorial(q, n)

    quadrature = abs(radial_moment(q, lambda t: 1.0, n, log_norm=log_exact) - 1.0)
    factorized = abs(math.expm1(log_generalized_factorial(q, n) - log_exact))

    logger.debug(f"moment residual q={q}, n={n}: quadrature {quadrature:.3e}, factorized {factorized:.3e}")
    return MomentResidual(q=q, n=n, quadrature=quadrature, factorized=factorized)
