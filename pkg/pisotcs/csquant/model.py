"""
Truncated Fock models and coherent states.
"""

import cmath
import math
from typing import Iterator, Optional, Union

import numpy as np

from pisotcs.client.config import get_config
from pisotcs.pisot_core import DeformationKind, DeformationSpec, deformed_integer, pisot_trace
from pisotcs.shared.errors import InvalidSpec, NonConvergent, OutOfDomain
from pisotcs.shared.utils.logging import get_component_logger

from .domain import CoherentState, FockModel

logger = get_component_logger("csquant")

MIN_N_MAX = 2


def _spectrum(q: float, s: Optional[int]) -> Iterator[Union[int, float]]:
    """x_0, x_1, ... as exact integers when s is known, floats otherwise."""
    if s is not None:
        prev, cur = 0, 1
        yield prev
        while True:
            yield cur
            prev, cur = cur, s * cur - prev
    n = 0
    while True:
        yield deformed_integer("symmetric", q, n) if n else 0.0
        n += 1


def _conjugate(s: int) -> float:
    """1/p for the root p > 1 of X^2 - sX + 1."""
    return 2.0 / (s + math.sqrt(s * s - 4))


def _resolve_source(source: Union[DeformationSpec, float]):
    if isinstance(source, DeformationSpec):
        if source.kind != DeformationKind.SYMMETRIC:
            raise InvalidSpec(f"coherent states need a symmetric deformation, got {source.kind.value}")
        return _conjugate(source.s), source, source.s

    q = float(source)
    if not math.isfinite(q) or q <= 0:
        raise InvalidSpec(f"q must be a positive real, got {source}")
    if q > 1.0:
        q = 1.0 / q
    if q == 1.0:
        return q, None, 2
    s = pisot_trace(q)
    if s is not None:
        spec = DeformationSpec.bosonic(s)
        return _conjugate(s), spec, s
    return q, None, None


def build_model(
    source: Union[DeformationSpec, float],
    z_max: Optional[float] = None,
    tol: Optional[float] = None,
) -> FockModel:
    """
    Build the truncated deformed oscillator for a symmetric Pisot spec or a real q.

    n_max is the first index past the peak of |z_max|^{2n}/x_n! whose term
    falls below tol times the running normalization.

    Raises:
        InvalidSpec: For non-symmetric specs or q <= 0
        NonConvergent: If no truncation is found within max_terms
    """
    config = get_config()
    z_max = config.z_max if z_max is None else float(z_max)
    tol = config.tol if tol is None else float(tol)
    if z_max < 0:
        raise OutOfDomain(f"z_max must be nonnegative, got {z_max}")

    q, spec, s = _resolve_source(source)
    spectrum = _spectrum(q, s)

    x = [next(spectrum)]
    log_factorials = [0.0]
    log_z2 = 2.0 * math.log(z_max) if z_max > 0 else -math.inf
    log_norm = 0.0
    log_tol = math.log(tol)
    n_max = None

    for n in range(1, config.max_terms + 1):
        x_n = next(spectrum)
        x.append(x_n)
        log_factorials.append(log_factorials[-1] + math.log(x_n))
        log_term = n * log_z2 - log_factorials[-1]
        log_norm = np.logaddexp(log_norm, log_term)
        decreasing = log_z2 < math.log(x_n)
        if n >= MIN_N_MAX and decreasing and log_term < log_tol + log_norm:
            n_max = n
            break

    if n_max is None:
        logger.error(f"no truncation for z_max={z_max} within {config.max_terms} terms")
        raise NonConvergent(f"no truncation for z_max={z_max} within {config.max_terms} terms")

    for _ in range(2):
        x_n = next(spectrum)
        x.append(x_n)
        log_factorials.append(log_factorials[-1] + math.log(x_n))

    logger.debug(f"built model q={q:.15g}, z_max={z_max}, n_max={n_max}")
    return FockModel(
        q=q,
        spec=spec,
        n_max=n_max,
        x=x,
        log_factorials=log_factorials,
        z_max=z_max,
        tol=tol,
    )


def log_probabilities(model: FockModel, r: float) -> np.ndarray:
    """ln rho_q(n, r) = 2n ln r - ln x_n! - ln N_q(r^2), n = 0..n_max."""
    n = np.arange(model.dim)
    if r == 0:
        out = np.full(model.dim, -np.inf)
        out[0] = 0.0
        return out
    return 2.0 * n * math.log(r) - model.log_fact(model.dim) - model.log_normalization(r * r)


def coherent_state(model: FockModel, z: complex) -> CoherentState:
    """
    |v_z> = sum_n z^n / sqrt(N_q(|z|^2) x_n!) |e_n>.

    Raises:
        OutOfDomain: If |z| exceeds the radius the model was truncated for
    """
    z = complex(z)
    r, theta = cmath.polar(z)
    if r > model.z_max * (1.0 + 1e-12):
        raise OutOfDomain(f"|z| = {r} exceeds z_max = {model.z_max}")

    n = np.arange(model.dim)
    moduli = np.exp(0.5 * log_probabilities(model, r))
    coeffs = moduli * np.exp(1j * n * theta)

    tail_mass = 0.0
    if r > 0:
        # geometric bound on sum_{n > n_max} rho_n
        lf = model.log_fact()
        first = math.exp(2.0 * (model.n_max + 1) * math.log(r) - lf[model.n_max + 1]
                         - model.log_normalization(r * r))
        ratio = r * r / float(model.x[model.n_max + 2])
        tail_mass = first / (1.0 - ratio) if ratio < 1.0 else math.inf

    return CoherentState(
        z=z,
        coeffs=coeffs,
        normalization=model.normalization(r * r),
        tail_mass=tail_mass,
    )
