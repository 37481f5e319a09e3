import cmath
import math

import numpy as np

from pisotcs.shared.errors import OutOfDomain

from .domain import FockModel
from .model import log_probabilities

TWO_PI = 2.0 * math.pi


def _reduced_time(model: FockModel, t: float) -> float:
    # integer frequencies: phases only depend on t mod 2 pi
    return math.fmod(t, TWO_PI) if model.exact else t


def _frequencies(model: FockModel, offset: int) -> np.ndarray:
    return np.array([float(v) for v in model.x[offset:offset + model.dim]])


def evolve_lower_symbol(model: FockModel, z: complex, t: float) -> complex:
    """
    z(t) = z / N_q(|z|^2) sum_n |z|^{2n}/x_n! exp(i (x_{n+2} - x_{n+1}) t).

    Periodic with period 2 pi for integer spectra, and |z(t)| <= |z|.
    """
    z = complex(z)
    r = abs(z)
    if r > model.z_max * (1.0 + 1e-12):
        raise OutOfDomain(f"|z| = {r} exceeds z_max = {model.z_max}")
    rho = np.exp(log_probabilities(model, r))
    # exact models: integer differences, taken before the float conversion
    diffs = np.array([float(b - a) for a, b in zip(model.x[1:model.dim + 1], model.x[2:model.dim + 2])])
    phases = np.exp(1j * diffs * _reduced_time(model, t))
    return z * complex(rho @ phases)


def phase_density(model: FockModel, z0: complex, z: complex, t: float = 0.0) -> float:
    """
    |N_{Delta,t}(conj(z) z0)|^2 / (N_q(|z|^2) N_q(|z0|^2)), where

        N_{Delta,t}(w) = sum_n w^n / (x_n! e^{i x_{n+1} t}).

    At t = 0 this is |<v_z|v_z0>|^2.
    """
    z0, z = complex(z0), complex(z)
    for point in (z0, z):
        if abs(point) > model.z_max * (1.0 + 1e-12):
            raise OutOfDomain(f"|z| = {abs(point)} exceeds z_max = {model.z_max}")

    w = z.conjugate() * z0
    log_denominator = model.log_normalization(abs(z) ** 2) + model.log_normalization(abs(z0) ** 2)
    if w == 0:
        # only the n = 0 term survives
        return math.exp(-log_denominator)

    modulus, arg = cmath.polar(w)
    n = np.arange(model.dim)
    log_mag = n * math.log(modulus) - model.log_fact(model.dim)
    phase = n * arg - _frequencies(model, 1) * _reduced_time(model, t)
    shift = float(log_mag.max())
    total = np.exp(log_mag - shift + 1j * phase).sum()
    return min(1.0, math.exp(2.0 * (shift + math.log(abs(total))) - log_denominator))
