"""
Angle-operator lower symbols through the d_k(r) coefficients.
"""

import math
from typing import Optional, Union

import numpy as np
from scipy import special

from pisotcs.moment import log_generalized_factorial
from pisotcs.shared.errors import OutOfDomain

from .domain import FockModel, FourierSeries


def log_mid_factorials(model: FockModel) -> np.ndarray:
    """ln x_{m/2}! for m = 0..2 n_max; odd m use the generalized factorial."""
    lf = model.log_fact(model.dim)
    out = np.empty(2 * model.n_max + 1)
    for m in range(len(out)):
        if m % 2 == 0:
            out[m] = lf[m // 2]
        else:
            out[m] = log_generalized_factorial(model.q, 0.5 * m)
    return out


def d_coefficients(model: FockModel, r: float, k_max: int) -> np.ndarray:
    """
    d_0(r)..d_{k_max}(r), where

        d_k(r) = r^k / N_q(r^2) sum_n x_{n+k/2}! / (x_n! x_{n+k}!) r^{2n}

    over the retained indices n + k <= n_max.
    """
    if r < 0:
        raise OutOfDomain(f"r must be nonnegative, got {r}")
    if k_max < 0:
        raise OutOfDomain(f"k must be nonnegative, got {k_max}")

    out = np.zeros(k_max + 1)
    out[0] = 1.0
    if r == 0:
        return out

    lf = model.log_fact(model.dim)
    mid = log_mid_factorials(model)
    log_r = math.log(r)
    log_norm = model.log_normalization(r * r)
    for k in range(1, min(k_max, model.n_max) + 1):
        n = np.arange(model.dim - k)
        log_terms = (k + 2 * n) * log_r + mid[2 * n + k] - lf[n] - lf[n + k]
        out[k] = math.exp(special.logsumexp(log_terms) - log_norm)
    return out


def d_k(model: FockModel, k: int, r: float) -> float:
    """d_k(r); d_0 = 1 and d_k(0) = 0 for k >= 1."""
    return float(d_coefficients(model, r, k)[k])


def angle_lower_symbol(
    model: FockModel,
    r: float,
    theta: Union[float, np.ndarray],
    k_max: Optional[int] = None,
) -> Union[float, np.ndarray]:
    """Lower symbol of the angle operator: pi - 2 sum_{k>=1} d_k(r) sin(k theta) / k."""
    k_max = model.n_max if k_max is None else k_max
    d = d_coefficients(model, r, k_max)
    theta = np.asarray(theta, dtype=float)
    k = np.arange(1, k_max + 1)
    series = np.sin(np.multiply.outer(theta, k)) @ (d[1:] / k)
    result = math.pi - 2.0 * series
    return float(result) if result.ndim == 0 else result


def generic_F_lower_symbol(
    model: FockModel,
    F: FourierSeries,
    r: float,
    theta: Union[float, np.ndarray],
) -> Union[complex, np.ndarray]:
    """c_0(F) + sum_{k != 0} d_|k|(r) c_k(F) e^{ik theta}."""
    d = d_coefficients(model, r, F.k_max)
    theta = np.asarray(theta, dtype=float)
    result = np.full(theta.shape, F.c(0), dtype=complex)
    for k in range(1, F.k_max + 1):
        phase = np.exp(1j * k * theta)
        result = result + d[k] * (F.c(k) * phase + F.c(-k) * phase.conj())
    return complex(result) if result.ndim == 0 else result
