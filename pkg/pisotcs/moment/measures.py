"""
The discrete measure varpi_q, the log-normal factor g_q and their Mellin
convolution w_q, which solves x_n! = int t^n w_q(t) dt.

Direct quadratures work in u = ln t, split into panels one standard
deviation of g_q wide, and stop 12 standard deviations beyond the
outermost bump.
"""

import math
from functools import lru_cache
from typing import Callable, Optional, Tuple, Union

import numpy as np
from numpy.typing import ArrayLike
from scipy import integrate

from pisotcs.client.config import get_config
from pisotcs.qcalc import QParam, log_product
from pisotcs.shared.errors import NonConvergent, OutOfDomain
from pisotcs.shared.utils.logging import get_component_logger

from .domain import Density, DiscreteMeasure

logger = get_component_logger("moment")

# g_q is cut 12 standard deviations from its centre
SPAN = 12.0

# e^v stays a finite nonzero float for |v| below this
EXP_LIMIT = 700.0


def _positive(t: ArrayLike) -> np.ndarray:
    arr = np.asarray(t, dtype=float)
    if np.any(arr <= 0):
        raise OutOfDomain("densities are defined for t > 0 only")
    return arr


def _shape_like(t: ArrayLike, values: np.ndarray) -> Union[float, np.ndarray]:
    return float(values) if np.ndim(t) == 0 else values


def varpi_measure(q: float, tol: Optional[float] = None) -> DiscreteMeasure:
    """
    Atoms t_j = q^(2j) / (1/q - q) with weights q^(2j) frak_E_q(-t_j).

    frak_E_q(-t_j) = prod_{i>=0} (1 - q^(2(i+j+1))) > 0, so every weight
    is positive. j_max is the smallest j with q^(2j) < tol.
    """
    params = QParam.resolve(q)
    tol = get_config().j_max_tol if tol is None else tol
    return _varpi_measure(params.q, tol)


@lru_cache(maxsize=64)
def _varpi_measure(q: float, tol: float) -> DiscreteMeasure:
    q2 = q * q
    j_max = max(0, int(math.ceil(math.log(tol) / math.log(q2))))
    while q2 ** j_max >= tol:
        j_max += 1

    scale = 1.0 / q - q
    atoms, weights = [], []
    for j in range(j_max + 1):
        sign, log_frak, _ = log_product(-(q2 ** (j + 1)), q2, 1e-17)
        atoms.append(q2 ** j / scale)
        weights.append(q2 ** j * sign * math.exp(log_frak))

    logger.debug(f"varpi_q for q={q}: {j_max + 1} atoms")
    return DiscreteMeasure(atoms=atoms, weights=weights, q=q, j_max=j_max)


def varpi_moment(measure: DiscreteMeasure, n: float) -> float:
    """sum_j t_j^n weight_j; equals q^(n(n+1)/2) x_n! for varpi_q."""
    return measure.moment(n)


def _g(q: float, t: np.ndarray) -> np.ndarray:
    var = abs(math.log(q))
    u = np.log(t) - 0.5 * math.log(q)
    return np.exp(-u * u / (2.0 * var)) / math.sqrt(2.0 * math.pi * var)


def g_density(q: float, t: ArrayLike) -> Union[float, np.ndarray]:
    """
    g_q(t) = exp(-(ln(t / sqrt(q)))^2 / (2|ln q|)) / sqrt(2 pi |ln q|).

    Its moments are int t^n g_q(t) dt = q^(-n(n+1)/2).
    """
    params = QParam.resolve(q)
    return _shape_like(t, _g(params.q, _positive(t)))


def g_moment(q: float, n: float) -> float:
    """Closed-form moment q^(-n(n+1)/2) of g_q."""
    return math.exp(-0.5 * n * (n + 1.0) * math.log(q))


def _truncate(measure: DiscreteMeasure, j_max: Optional[int]) -> Tuple[np.ndarray, np.ndarray]:
    atoms = np.asarray(measure.atoms)
    weights = np.asarray(measure.weights)
    if j_max is not None:
        atoms, weights = atoms[: j_max + 1], weights[: j_max + 1]
    return atoms, weights


def w_density(q: float, t: ArrayLike, j_max: Optional[int] = None) -> Union[float, np.ndarray]:
    """
    w_q(t) = (1/q - q) sum_j g_q(t (1/q - q) / q^(2j)) frak_E_q(-q^(2j) / (1/q - q)).

    Nonnegative on (0, inf); int t^n w_q(t) dt = x_n!.
    """
    measure = varpi_measure(q)
    atoms, weights = _truncate(measure, j_max)
    arr = _positive(t)

    frak = weights / (atoms * (1.0 / q - q))
    values = (1.0 / q - q) * (_g(q, arr[..., None] / atoms) @ frak)
    return _shape_like(t, values)


def mellin_convolve(a: Density, b: Union[DiscreteMeasure, Density]) -> Density:
    """
    Multiplicative convolution w(t) = int a(t/u) b(du) / u.

    Moments multiply: int t^n w = (int t^n a)(int t^n b).

    Args:
        a: Density on (0, inf)
        b: Discrete measure or density on (0, inf)

    Returns:
        The convolved density (vectorized in t)
    """
    if isinstance(b, DiscreteMeasure):
        atoms = np.asarray(b.atoms)
        weights = np.asarray(b.weights)

        def convolved(t: ArrayLike) -> Union[float, np.ndarray]:
            arr = _positive(t)
            values = np.asarray(a(arr[..., None] / atoms)) @ (weights / atoms)
            return _shape_like(t, values)

        return convolved

    quad_tol = get_config().quad_tol

    def integrand(t: float, v: float) -> float:
        if abs(v) > EXP_LIMIT:
            return 0.0
        ratio = t * math.exp(-v)
        if ratio <= 0.0 or not math.isfinite(ratio):
            return 0.0
        return float(a(ratio)) * float(b(math.exp(v)))

    def convolved_point(t: float) -> float:
        # u = e^v: int a(t e^-v) b(e^v) dv
        value, abserr = integrate.quad(
            lambda v: integrand(t, v),
            -math.inf, math.inf, epsabs=0.0, epsrel=quad_tol, limit=200,
        )
        if abserr > 1e3 * quad_tol * max(abs(value), 1e-300):
            logger.error(f"Mellin convolution at t={t}: error estimate {abserr:.3e}")
            raise NonConvergent(f"Mellin convolution at t={t}: error estimate {abserr:.3e}")
        return value

    def convolved(t: ArrayLike) -> Union[float, np.ndarray]:
        arr = _positive(t)
        values = np.vectorize(convolved_point, otypes=[float])(arr)
        return _shape_like(t, values)

    return convolved


def density_moment(
    integrand: Callable[[float], float],
    u_lo: float,
    u_hi: float,
    width: float,
    label: str = "moment",
) -> float:
    """
    int integrand(u) du over [u_lo, u_hi], one adaptive quadrature per panel.

    Callers pass the integrand already in u = ln t, i.e. including the
    Jacobian e^u.

    Raises:
        NonConvergent: If a panel misses the requested tolerance
    """
    quad_tol = get_config().quad_tol
    n_panels = max(1, int(math.ceil((u_hi - u_lo) / width)))
    edges = np.linspace(u_lo, u_hi, n_panels + 1)

    total, error = 0.0, 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        value, abserr = integrate.quad(integrand, lo, hi, epsabs=0.0, epsrel=quad_tol, limit=100)
        total += value
        error += abserr

    if error > 1e3 * quad_tol * abs(total):
        logger.error(f"{label}: quadrature error estimate {error:.3e} for value {total:.6e}")
        raise NonConvergent(f"{label}: quadrature error estimate {error:.3e}")
    logger.debug(f"{label}: {n_panels} panels, value {total!r}, error <= {error:.3e}")
    return total


def log_t_window(q: float, n: float, j_max: Optional[int] = None, shift: float = 0.0) -> Tuple[float, float, float]:
    """
    (u_lo, u_hi, sigma) covering every bump of t^n w_q(t) in u = ln t.

    The bump of atom j sits at ln t_j + ln(q)/2 + (n+1)|ln q|; shift widens
    the window to the right for integrands with extra growth.
    """
    measure = varpi_measure(q)
    atoms, _ = _truncate(measure, j_max)
    var = abs(math.log(q))
    sigma = math.sqrt(var)
    centre_offset = 0.5 * math.log(q) + (n + 1.0) * var
    u_lo = math.log(atoms[-1]) + centre_offset - SPAN * sigma
    u_hi = math.log(atoms[0]) + centre_offset + SPAN * sigma + shift
    return u_lo, u_hi, sigma


def w_moment(q: float, n: float, j_max: Optional[int] = None) -> float:
    """int t^n w_q(t) dt by direct quadrature in ln t."""
    u_lo, u_hi, sigma = log_t_window(q, n, j_max)
    return density_moment(
        lambda u: math.exp((n + 1.0) * u) * w_density(q, math.exp(u), j_max),
        u_lo, u_hi, sigma, label=f"w_q moment n={n}",
    )
