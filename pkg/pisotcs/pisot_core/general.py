"""
General quadratic Pisot numbers beta with integer part a (or c) and the
exact decomposition beta^n = v_n beta + w_n.
"""

import math

from pisotcs.shared.errors import InvalidSpec
from pisotcs.shared.utils.logging import get_component_logger

from .domain import ConjugateCase, GeneralPisotParams, PowerTerms, RootPair

logger = get_component_logger("pisot_core")


def general_pisot_roots(params: GeneralPisotParams) -> RootPair:
    """
    beta and its conjugate beta'.

    Positive case: roots of X^2 - (a+1)X + (a-b), with 0 < beta' < 1.
    Negative case: roots of X^2 - cX - d, with -1 < beta' < 0.
    In both cases floor(beta) equals a (resp. c).

    Raises:
        InvalidSpec: If the parameter inequalities fail
    """
    s, r = params.trace, params.norm
    disc = s * s - 4 * r
    beta = (s + math.sqrt(disc)) / 2
    beta_conj = r / beta
    roots = RootPair(p=beta, q=beta_conj, s=s, r=r, discriminant=disc)

    if params.case == ConjugateCase.POSITIVE:
        conj_ok = 0 < beta_conj < 1
    else:
        conj_ok = -1 < beta_conj < 0
    if not conj_ok or math.floor(beta) != params.floor:
        logger.error(f"{params} does not define a quadratic Pisot number")
        raise InvalidSpec(f"{params} does not define a quadratic Pisot number")

    return roots


def power_decomposition(params: GeneralPisotParams, n: int) -> PowerTerms:
    """
    Exact integers with beta^n = v_n beta + w_n.

    Positive case:
        v_{n+1} = (a+1) v_n + (b-a) v_{n-1},  w_{n+1} = (b-a) v_n,
        beta^n + beta'^n = (a+1) v_n + 2(b-a) v_{n-1}
    Negative case:
        v_{n+1} = c v_n + d v_{n-1},  w_{n+1} = d v_n,
        beta^n + beta'^n = c v_n + 2d v_{n-1}

    Args:
        params: Validated general Pisot parameters
        n: Nonnegative power

    Returns:
        PowerTerms(v, w, trace)
    """
    if n < 0:
        raise InvalidSpec(f"power must be nonnegative, got {n}")
    if n == 0:
        return PowerTerms(v=0, w=1, trace=2)

    s = params.trace
    k = -params.norm  # b - a in the positive case, d in the negative case

    v_prev, v = 0, 1
    for _ in range(n - 1):
        v_prev, v = v, s * v + k * v_prev

    return PowerTerms(v=v, w=k * v_prev, trace=s * v + 2 * k * v_prev)
