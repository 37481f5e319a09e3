"""
Summation engine shared by every q-series, Jackson sum and product.

A series stops once two consecutive non-zero terms are each below
tol * |partial sum| together with their geometric tail |t_n| rho / (1 - rho),
rho being the ratio to the previous non-zero term. An isolated exact zero,
such as an integrand vanishing at a Jackson node, never ends a sum.
"""

import math
from itertools import count
from typing import Callable, Iterable, Iterator, Optional, Tuple, Union

import numpy as np

from pisotcs.client.config import get_config
from pisotcs.shared.errors import NonConvergent
from pisotcs.shared.utils.logging import get_component_logger

from .domain import SeriesResult

logger = get_component_logger("qcalc")

Number = Union[float, complex]

# passing terms in a row that end a sum
CONFIRMING_TERMS = 2
# exact zeros in a row that end a sum
ZERO_RUN = 32


def resolve_tolerances(
    tol: Optional[float] = None, max_terms: Optional[int] = None
) -> Tuple[float, int]:
    config = get_config()
    return (
        config.tol if tol is None else tol,
        config.max_terms if max_terms is None else max_terms,
    )


def sum_series(
    terms: Iterable[Number],
    tol: Optional[float] = None,
    max_terms: Optional[int] = None,
    label: str = "series",
) -> SeriesResult:
    """
    Sum a (possibly infinite) stream of terms.

    A non-zero term passes when its ratio rho to the previous non-zero term
    is below 1 and both |term| and the tail |term| rho / (1 - rho) are at
    most tol * |partial|. The sum stops after CONFIRMING_TERMS passing terms
    in a row, or after ZERO_RUN exact zeros in a row. Zero terms are skipped
    by the ratio test.

    Args:
        terms: Iterable of terms; a finite iterable is summed completely
        tol: Relative truncation tolerance (default from config)
        max_terms: Cap on terms (default from config)
        label: Name used in log and error messages

    Returns:
        SeriesResult with the value, terms used and tail estimate

    Raises:
        NonConvergent: If the tail test does not pass within max_terms
    """
    tol, max_terms = resolve_tolerances(tol, max_terms)

    partial: Number = 0.0
    last_nonzero = 0.0
    passed = 0
    zeros = 0
    used = 0
    for term in terms:
        if used >= max_terms:
            logger.error(f"{label}: no convergence after {max_terms} terms, partial sum {partial!r}")
            raise NonConvergent(f"{label}: no convergence after {max_terms} terms")

        partial += term
        used += 1
        mag = abs(term)
        if not math.isfinite(mag):
            logger.error(f"{label}: term {used - 1} is not finite")
            raise NonConvergent(f"{label}: term {used - 1} is not finite")

        if mag == 0.0:
            zeros += 1
            if zeros >= ZERO_RUN:
                return _done(label, partial, used, 0.0)
            continue
        zeros = 0

        tail = _tail(mag, last_nonzero)
        last_nonzero = mag
        if tail is not None and max(mag, tail) <= tol * abs(partial):
            passed += 1
            if passed >= CONFIRMING_TERMS:
                return _done(label, partial, used, tail)
        else:
            passed = 0

    return _done(label, partial, used, 0.0)


def _tail(mag: float, previous: float) -> Optional[float]:
    """Geometric tail after a term of size mag, None without a ratio below 1."""
    if previous <= 0.0:
        return None
    rho = mag / previous
    if rho >= 1.0:
        return None
    return mag * rho / (1.0 - rho)


def _done(label: str, value: Number, used: int, tail: float) -> SeriesResult:
    logger.debug(f"{label}: {used} terms, tail <= {tail:.3e}")
    return SeriesResult(value=value, terms_used=used, truncation_bound=tail)


def sum_bilateral(
    term: Callable[[int], Number],
    tol: Optional[float] = None,
    max_terms: Optional[int] = None,
    label: str = "bilateral series",
) -> SeriesResult:
    """Sum term(n) over all integers n, each direction to the same criterion."""
    forward = sum_series((term(n) for n in count(0)), tol, max_terms, label=f"{label} (n >= 0)")
    backward = sum_series((term(-n) for n in count(1)), tol, max_terms, label=f"{label} (n < 0)")
    return SeriesResult(
        value=forward.value + backward.value,
        terms_used=forward.terms_used + backward.terms_used,
        truncation_bound=forward.truncation_bound + backward.truncation_bound,
    )


def log_product(b: float, q: float, tol: float) -> Tuple[float, float, int]:
    """
    sign and ln|.| of prod_{j>=0} (1 + q^j b), 0 < q < 1.

    Factors are kept while |q^j b| >= tol; their number is known in closed
    form, so the product is evaluated in one vectorized pass.

    Returns:
        (sign, log_abs, factors) with sign 0.0 when a factor vanishes
    """
    if b == 0.0 or abs(b) < tol:
        return 1.0, 0.0, 0
    n_factors = int(math.ceil(math.log(tol / abs(b)) / math.log(q)))
    y = b * np.power(q, np.arange(n_factors, dtype=float))
    f = 1.0 + y
    if np.any(f == 0.0):
        return 0.0, -math.inf, n_factors
    with np.errstate(invalid="ignore", divide="ignore"):
        logs = np.where(y > -1.0, np.log1p(y), np.log(np.abs(f)))
    sign = -1.0 if np.count_nonzero(f < 0) % 2 else 1.0
    return sign, float(np.sum(logs)), n_factors


def iter_terms(first: Number, ratio: Callable[[int], Number]) -> Iterator[Number]:
    """Terms t_0 = first, t_{n+1} = t_n * ratio(n)."""
    term = first
    for n in count(0):
        yield term
        term = term * ratio(n)
