"""
Photon-counting statistics and quadrature dispersions of coherent states.
"""

import math

import numpy as np
from scipy import special

from .domain import Dispersions, FockModel, PhotonStatistics
from .model import log_probabilities

CHARACTERISTIC_TERMS = 20


def probabilities(model: FockModel, r: float) -> np.ndarray:
    """rho_q(n, r) = r^{2n} / (N_q(r^2) x_n!), n = 0..n_max."""
    return np.exp(log_probabilities(model, abs(r)))


def dispersions(model: FockModel, z: complex) -> Dispersions:
    """
    (Delta Q)^2 = (Delta P)^2 = <x_{N+1} - x_N> / 2 in |v_z>.

    closed_form uses x_{n+1} = s x_n - x_{n-1}:
    1/2 |1/N_q + (s - 1)|z|^2 - |z|^4 <1/x_{n+2}>|.
    """
    r = abs(complex(z))
    rho = probabilities(model, r)
    x = model.spectrum()
    dim = model.dim

    var = 0.5 * float(rho @ (x[1:dim + 1] - x[:dim]))
    s = float(model.trace)
    inverse = float(rho @ (1.0 / x[2:dim + 2]))
    closed = 0.5 * abs(1.0 / model.normalization(r * r) + (s - 1.0) * r * r - r ** 4 * inverse)
    return Dispersions(var_q=var, var_p=var, product=var * var, closed_form=closed)


def photon_statistics(model: FockModel, z: complex, n_characteristic: int = CHARACTERISTIC_TERMS) -> PhotonStatistics:
    """
    Poisson-like distribution of |v_z> and the quantities derived from it.

    mandel is (Var N - <N>)/<N> for the occupation number N; mandel_spectral
    is the same form on x_N. Both are 0 at z = 0.
    """
    z = complex(z)
    r = abs(z)
    rho = probabilities(model, r)
    x = model.spectrum(model.dim)
    n = np.arange(model.dim)

    mean = float(rho @ x)
    mean_number = float(rho @ n)
    if r == 0:
        mandel = mandel_spectral = 0.0
    else:
        mandel = (float(rho @ (n - mean_number) ** 2) - mean_number) / mean_number
        mandel_spectral = (float(rho @ (x - mean) ** 2) - mean) / mean

    characteristic = []
    for k in range(1, n_characteristic + 1):
        ratio = float(model.x_at(k + 1)) / float(model.x_at(k))
        characteristic.append(ratio * k / (k + 1.0))

    var_q = dispersions(model, z).var_q
    snr = 2.0 * z.real ** 2 / var_q

    return PhotonStatistics(
        probs=rho.tolist(),
        mean=mean,
        mean_number=mean_number,
        mandel=mandel,
        mandel_spectral=mandel_spectral,
        characteristic=characteristic,
        snr=snr,
    )


def factorial_ratio(model: FockModel, n: int) -> float:
    """d_q(n) = x_n! / n!."""
    log_fact = sum(math.log(model.x_at(k)) for k in range(1, n + 1))
    return math.exp(log_fact - special.gammaln(n + 1.0))


def boson_coefficients(model: FockModel) -> np.ndarray:
    """sqrt(x_{n+1} / (n+1)), so that a_dagger|e_n> = sqrt(x_{n+1}/(n+1)) b_dagger|e_n>."""
    x = model.spectrum()
    n = np.arange(1, model.dim + 1)
    return np.sqrt(x[1:model.dim + 1] / n)
