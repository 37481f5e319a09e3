"""
Symmetric q-calculus: q <-> 1/q invariant brackets, derivative and
integrals, the exponentials frak_e_q and frak_E_q, and the gamma-like
integral sgamma_q.
"""

import math
from itertools import count
from typing import Callable, Iterator, Literal, Optional, Union

from scipy import special

from pisotcs.pisot_core import deformed_integer, pisot_trace
from pisotcs.shared.errors import OutOfDomain
from pisotcs.shared.utils.logging import get_component_logger

from .domain import QParam, SeriesResult
from .series import log_product, resolve_tolerances, sum_bilateral, sum_series
from .standard import _central_difference, _quad

logger = get_component_logger("qcalc")

RealFunction = Callable[[float], float]


def _fold(q: float) -> float:
    if q <= 0:
        raise OutOfDomain(f"q must be positive, got {q}")
    return 1.0 / q if q > 1.0 else q


def sym_q_bracket(q: float, t: float) -> float:
    """^s[t]_q = (q^t - q^-t) / (q - q^-1) for real t; t itself at q = 1."""
    q = _fold(q)
    if q == 1.0:
        return float(t)
    return (q ** t - q ** -t) / (q - 1.0 / q)


def symmetric_brackets(q: float) -> Iterator[Union[int, float]]:
    """
    ^s[1]_q, ^s[2]_q, ...

    Exact integers from the recurrence when q is a symmetric Pisot
    conjugate, deformed integers in floating point otherwise.
    """
    s = pisot_trace(q)
    if s is not None:
        prev, cur = 0, 1
        while True:
            yield cur
            prev, cur = cur, s * cur - prev
    q = _fold(q)
    for n in count(1):
        yield float(n) if q == 1.0 else deformed_integer("symmetric", q, n)


def sym_q_derivative(f: RealFunction, q: float, x: float) -> float:
    """(^sD_q f)(x) = (f(qx) - f(x/q)) / ((q - 1/q) x)."""
    if x == 0:
        raise OutOfDomain("^sD_q f is not defined at x = 0")
    if q == 1.0:
        return _central_difference(f, x)
    return (f(q * x) - f(x / q)) / ((q - 1.0 / q) * x)


def sym_q_integral(
    f: RealFunction,
    q: float,
    a: float,
    tol: Optional[float] = None,
    max_terms: Optional[int] = None,
) -> SeriesResult:
    """
    Proper symmetric q-integral from 0 to a:
    (1 - q^2) a sum_{n>=0} q^(2n) f(q^(2n+1) a).

    For f = ^sD_q F the result is F(a) - F(0). q > 1 is folded to 1/q.
    """
    q = _fold(q)
    if q == 1.0:
        return _quad(f, 0.0, a, "integral")
    params = QParam.resolve(q, tol, max_terms)
    if a == 0:
        return SeriesResult(value=0.0, terms_used=0)

    q2 = params.q * params.q

    def terms():
        node, weight = params.q * a, (1.0 - q2) * a
        while True:
            yield weight * f(node)
            node *= q2
            weight *= q2

    return sum_series(terms(), params.tol, params.max_terms, label="symmetric q-integral")


def sym_q_integral_improper(
    f: RealFunction,
    q: float,
    A: float,
    tol: Optional[float] = None,
    max_terms: Optional[int] = None,
) -> SeriesResult:
    """(1 - q^2) sum_{n in Z} (q^(2n) / A) f(q^(2n+1) / A)."""
    if A <= 0:
        raise OutOfDomain(f"A must be positive, got {A}")
    q = _fold(q)
    if q == 1.0:
        return _quad(f, 0.0, math.inf, "improper integral")
    params = QParam.resolve(q, tol, max_terms)

    def term(n: int) -> float:
        scale = params.q ** (2 * n) / A
        return (1.0 - params.q ** 2) * scale * f(params.q * scale)

    return sum_bilateral(term, params.tol, params.max_terms, label="improper symmetric q-integral")


def sym_exp(
    kind: Literal["e", "E"],
    q: float,
    x: float,
    tol: Optional[float] = None,
    max_terms: Optional[int] = None,
) -> SeriesResult:
    """
    Symmetric q-exponentials.

    kind "e": frak_e_q(x) = sum x^n / ^s[n]_q!, entire, frak_e_{1/q} = frak_e_q.
    kind "E": frak_E_q(x) = sum q^(n(n+1)/2) x^n / ^s[n]_q! = E_{q^2}^{qx};
              entire for q <= 1, radius 1/(q - 1/q) for q > 1.

    frak_E_{1/q}(x) = e_{q^2}^{x/q}, so frak_E_q(t) frak_E_{1/q}(-q^2 t) = 1.

    Raises:
        OutOfDomain: Outside the radius of convergence
    """
    if q <= 0:
        raise OutOfDomain(f"q must be positive, got {q}")
    if kind == "E" and q > 1.0 and abs(x) >= 1.0 / (q - 1.0 / q):
        raise OutOfDomain(f"frak_E_q needs |x| < {1.0 / (q - 1.0 / q)} for q = {q}, got {x}")
    if kind not in ("e", "E"):
        raise OutOfDomain(f"unknown symmetric exponential kind {kind!r}")

    log_q = math.log(q)

    def terms():
        term = 1.0
        yield term
        for n, bracket in enumerate(symmetric_brackets(q)):
            factor = x / float(bracket)
            if kind == "E":
                factor *= math.exp((n + 1) * log_q)
            term *= factor
            yield term

    return sum_series(terms(), tol, max_terms, label=f"frak_{kind}_q")


def sym_exp_product(q: float, t: float, tol: Optional[float] = None) -> float:
    """frak_E_q(t) = prod_{j>=0} (1 + q^(2j+1) (1 - q^2) t), 0 < q < 1."""
    params = QParam.resolve(q, tol)
    q2 = params.q * params.q
    sign, log_abs, _ = log_product(params.q * (1.0 - q2) * t, q2, params.tol)
    return sign * math.exp(log_abs) if sign else 0.0


def sym_exp_first_zero(q: float) -> float:
    """Location of the first zero of frak_E_q on the negative axis, -1/(q(1 - q^2))."""
    q = _fold(q)
    return -1.0 / (q * (1.0 - q * q))


def sym_gamma_tilde(
    q: float,
    t: float,
    tol: Optional[float] = None,
    max_terms: Optional[int] = None,
) -> float:
    """
    ^sgamma_q(t) = int_0^{1/(1-q^2)} x^(t-1) frak_E_q(-x) ^sd_q x.

    Since ^sD_q frak_E_q(x) = q frak_E_q(qx), the primitive of frak_E_q(-x)
    is -frak_E_q(-x/q), which vanishes at the upper limit (the first zero
    of frak_E_q). Hence

        ^sgamma_q(t + 1) = q^t ^s[t]_q ^sgamma_q(t),  ^sgamma_q(1) = 1,
        ^sgamma_q(n + 1) = q^(n(n+1)/2) ^s[n]_q!.

    q = 1 gives Gamma(t).
    """
    if t <= 0:
        raise OutOfDomain(f"^sgamma_q needs t > 0, got {t}")
    q = _fold(q)
    if q == 1.0:
        return float(special.gamma(t))
    tol, max_terms = resolve_tolerances(tol, max_terms)

    def integrand(x: float) -> float:
        return x ** (t - 1.0) * sym_exp("E", q, -x, tol, max_terms).value

    return sym_q_integral(integrand, q, 1.0 / (1.0 - q * q), tol, max_terms).value
