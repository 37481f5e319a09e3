"""
Standard (asymmetric) q-calculus: brackets, q-Pochhammer symbols,
q-exponentials, the q-gamma function, the q-derivative and Jackson
integrals. q = 1 falls back to the classical objects.
"""

import math
from typing import Callable, Literal, Optional, Union

from scipy import integrate, special

from pisotcs.shared.errors import DivergentProduct, NonConvergent, OutOfDomain
from pisotcs.shared.utils.logging import get_component_logger

from .domain import QParam, SeriesResult
from .series import iter_terms, log_product, sum_bilateral, sum_series

logger = get_component_logger("qcalc")

RealFunction = Callable[[float], float]
Order = Union[int, float]


def q_bracket(q: float, x: float) -> float:
    """[x]_q = (1 - q^x) / (1 - q); x itself at q = 1."""
    if q == 1.0:
        return float(x)
    return (1.0 - q ** x) / (1.0 - q)


def q_factorial(q: float, n: int) -> float:
    """[n]_q! = [1]_q [2]_q ... [n]_q."""
    result = 1.0
    for k in range(1, n + 1):
        result *= q_bracket(q, k)
    return result


def q_pochhammer(
    a: float,
    b: float,
    q: float,
    order: Order,
    tol: Optional[float] = None,
) -> float:
    """
    q-Pochhammer symbol (a + b)_q^order.

    finite n:   prod_{j<n} (a + q^j b)
    infinite:   prod_{j>=0} (1 + q^j b), requires a = 1
    real t:     (1 + b)_q^inf / (1 + q^t b)_q^inf, requires a = 1

    Args:
        a: First summand (must be 1 for infinite or real order)
        b: Second summand
        q: Base; 0 < q < 1 for infinite or real order
        order: Nonnegative int, math.inf or a real number
        tol: Factors with |q^j b| < tol are dropped

    Raises:
        DivergentProduct: If a != 1 for an infinite product, or a
            denominator factor vanishes in the real-order form
    """
    if isinstance(order, int) and not isinstance(order, bool):
        if order < 0:
            raise OutOfDomain(f"finite order must be nonnegative, got {order}")
        result = 1.0
        for j in range(order):
            result *= a + q ** j * b
        return result

    params = QParam.resolve(q, tol)
    if a != 1.0:
        raise DivergentProduct(f"infinite product with a = {a} != 1 does not converge")

    sign_num, log_num, _ = log_product(b, params.q, params.tol)
    if order == math.inf:
        return sign_num * math.exp(log_num) if sign_num else 0.0

    sign_den, log_den, _ = log_product(params.q ** order * b, params.q, params.tol)
    if sign_den == 0.0:
        logger.error(f"(1 + q^t b)_q^inf vanishes for q={q}, t={order}, b={b}")
        raise DivergentProduct(f"denominator vanishes for q={q}, t={order}, b={b}")
    if sign_num == 0.0:
        return 0.0
    return sign_num * sign_den * math.exp(log_num - log_den)


def q_pochhammer_inf(a: float, q: float, tol: Optional[float] = None) -> float:
    """(1 + a)_q^inf."""
    return q_pochhammer(1.0, a, q, math.inf, tol)


def q_pochhammer_real(a: float, q: float, t: float, tol: Optional[float] = None) -> float:
    """(1 + a)_q^t for real t."""
    return q_pochhammer(1.0, a, q, float(t), tol)


def q_exp(
    kind: Literal["e", "E"],
    q: float,
    x: float,
    tol: Optional[float] = None,
    max_terms: Optional[int] = None,
) -> SeriesResult:
    """
    q-exponentials by series.

    e_q^x = sum x^n / [n]_q!                  (|x| < 1/(1-q) when q < 1)
    E_q^x = sum q^(n(n-1)/2) x^n / [n]_q!     (all x when q <= 1)

    Raises:
        OutOfDomain: Outside the radius of convergence
    """
    if q <= 0:
        raise OutOfDomain(f"q must be positive, got {q}")

    if kind == "e":
        if q < 1.0 and abs(x) >= 1.0 / (1.0 - q):
            raise OutOfDomain(f"e_q^x needs |x| < {1.0 / (1.0 - q)}, got {x}")
        terms = iter_terms(1.0, lambda n: x / q_bracket(q, n + 1))
    elif kind == "E":
        if q > 1.0 and abs(x) >= 1.0 / (1.0 - 1.0 / q):
            raise OutOfDomain(f"E_q^x needs |x| < {1.0 / (1.0 - 1.0 / q)}, got {x}")
        terms = iter_terms(1.0, lambda n: q ** n * x / q_bracket(q, n + 1))
    else:
        raise OutOfDomain(f"unknown q-exponential kind {kind!r}")

    return sum_series(terms, tol, max_terms, label=f"{kind}_q^x")


def q_exp_product(
    kind: Literal["e", "E"],
    q: float,
    x: float,
    tol: Optional[float] = None,
) -> float:
    """
    Product forms, 0 < q < 1:
    e_q^x = 1 / (1 - (1-q)x)_q^inf,  E_q^x = (1 + (1-q)x)_q^inf.
    """
    if kind == "E":
        return q_pochhammer_inf((1.0 - q) * x, q, tol)
    if kind == "e":
        if q < 1.0 and abs(x) >= 1.0 / (1.0 - q):
            raise OutOfDomain(f"e_q^x needs |x| < {1.0 / (1.0 - q)}, got {x}")
        return 1.0 / q_pochhammer_inf(-(1.0 - q) * x, q, tol)
    raise OutOfDomain(f"unknown q-exponential kind {kind!r}")


def q_gamma(q: float, t: float, tol: Optional[float] = None) -> float:
    """
    Gamma_q(t) = (1 - q)_q^(t-1) / (1 - q)^(t-1), 0 < q < 1.

    Satisfies Gamma_q(t + 1) = [t]_q Gamma_q(t) and Gamma_q(1) = 1; q = 1
    returns the classical Gamma(t).

    Raises:
        OutOfDomain: For t <= 0 or q outside (0, 1]
    """
    if t <= 0:
        raise OutOfDomain(f"Gamma_q needs t > 0, got {t}")
    if q == 1.0:
        return float(special.gamma(t))

    params = QParam.resolve(q, tol)
    _, log_num, _ = log_product(-params.q, params.q, params.tol)
    _, log_den, _ = log_product(-params.q ** t, params.q, params.tol)
    return math.exp(log_num - log_den - (t - 1.0) * math.log1p(-params.q))


def q_derivative(f: RealFunction, q: float, x: float) -> float:
    """(D_q f)(x) = (f(qx) - f(x)) / ((q - 1) x); ordinary derivative at q = 1."""
    if x == 0:
        raise OutOfDomain("D_q f is not defined at x = 0")
    if q == 1.0:
        return _central_difference(f, x)
    return (f(q * x) - f(x)) / ((q - 1.0) * x)


def _central_difference(f: RealFunction, x: float) -> float:
    h = 6e-6 * max(1.0, abs(x))
    return (f(x + h) - f(x - h)) / (2.0 * h)


def _quad(f: RealFunction, lo: float, hi: float, label: str) -> SeriesResult:
    value, abserr, info = integrate.quad(f, lo, hi, limit=200, full_output=True)[:3]
    if abserr > 1e-8 * max(1.0, abs(value)):
        logger.error(f"{label}: quadrature error estimate {abserr:.3e}")
        raise NonConvergent(f"{label}: quadrature error estimate {abserr:.3e}")
    return SeriesResult(value=value, terms_used=int(info["neval"]), truncation_bound=abserr)


def jackson_integral(
    f: RealFunction,
    q: float,
    a: float,
    tol: Optional[float] = None,
    max_terms: Optional[int] = None,
) -> SeriesResult:
    """
    Jackson integral from 0 to a: (1 - q) sum_{j>=0} a q^j f(a q^j).

    For f = D_q F with F continuous at 0 the result is F(a) - F(0).
    q = 1 integrates by adaptive quadrature.

    Raises:
        NonConvergent: If the terms do not decay within max_terms
    """
    if q == 1.0:
        return _quad(f, 0.0, a, "integral")
    params = QParam.resolve(q, tol, max_terms)
    if a == 0:
        return SeriesResult(value=0.0, terms_used=0)

    def terms():
        node, weight = a, (1.0 - params.q) * a
        while True:
            yield weight * f(node)
            node *= params.q
            weight *= params.q

    return sum_series(terms(), params.tol, params.max_terms, label="Jackson integral")


def jackson_integral_ab(
    f: RealFunction,
    q: float,
    a: float,
    b: float,
    tol: Optional[float] = None,
    max_terms: Optional[int] = None,
) -> SeriesResult:
    """Jackson integral from a to b, as the difference of two integrals from 0."""
    upper = jackson_integral(f, q, b, tol, max_terms)
    lower = jackson_integral(f, q, a, tol, max_terms)
    return SeriesResult(
        value=upper.value - lower.value,
        terms_used=upper.terms_used + lower.terms_used,
        truncation_bound=upper.truncation_bound + lower.truncation_bound,
    )


def jackson_improper(
    f: RealFunction,
    q: float,
    A: float,
    tol: Optional[float] = None,
    max_terms: Optional[int] = None,
) -> SeriesResult:
    """
    Improper Jackson integral (1 - q) sum_{n in Z} (q^n / A) f(q^n / A).

    The value depends on A in general; it does not when f = D_q F and F
    has limits at 0 and infinity.
    """
    if A <= 0:
        raise OutOfDomain(f"A must be positive, got {A}")
    if q == 1.0:
        return _quad(f, 0.0, math.inf, "improper integral")
    params = QParam.resolve(q, tol, max_terms)

    def term(n: int) -> float:
        x = params.q ** n / A
        return (1.0 - params.q) * x * f(x)

    return sum_bilateral(term, params.tol, params.max_terms, label="improper Jackson integral")


def q_gamma_integral(
    q: float,
    t: float,
    tol: Optional[float] = None,
    max_terms: Optional[int] = None,
) -> float:
    """Gamma_q(t) as the Jackson integral of x^(t-1) E_q^(-qx) over [0, 1/(1-q)]."""
    if t <= 0:
        raise OutOfDomain(f"Gamma_q needs t > 0, got {t}")
    params = QParam.resolve(q, tol, max_terms)

    def integrand(x: float) -> float:
        return x ** (t - 1.0) * q_exp("E", params.q, -params.q * x, params.tol).value

    return jackson_integral(integrand, params.q, 1.0 / (1.0 - params.q), params.tol, params.max_terms).value
