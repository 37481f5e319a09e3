"""
Pisot sequences: root solving, exact recurrences and deformed integers.
"""

import math
from typing import Dict, List, Optional, Tuple, Union

from pisotcs.shared.errors import InvalidSpec
from pisotcs.shared.utils.logging import get_component_logger

from .domain import DeformationKind, DeformationSpec, PisotSequence, RootPair

logger = get_component_logger("pisot_core")

# (label, spec, index shift) for the reference rows; the Fibonacci row is u_{n+1}
TABLE1_ROWS: Tuple[Tuple[str, DeformationSpec, int], ...] = (
    ("fibonacci", DeformationSpec.fermionic(1), 1),
    ("q_fermionic", DeformationSpec.fermionic(2), 0),
    ("q_bosonic_1", DeformationSpec.bosonic(3), 0),
    ("q_bosonic_2", DeformationSpec.bosonic(4), 0),
    ("q_bosonic_3", DeformationSpec.bosonic(5), 0),
)


def solve_quadratic(spec: DeformationSpec) -> RootPair:
    """
    Roots of X^2 - sX + r = 0, dominant root first.

    The smaller root is obtained as r/p, which avoids cancellation when
    s^2 >> 4|r|.
    """
    disc = spec.discriminant
    p = (spec.s + math.sqrt(disc)) / 2
    q = spec.r / p
    roots = RootPair(p=p, q=q, s=spec.s, r=spec.r, discriminant=disc)
    logger.debug(f"roots of X^2 - {spec.s}X + {spec.r}: p={p!r}, q={q!r}")
    return roots


def solve_unit_quadratic(spec: DeformationSpec) -> RootPair:
    """
    Roots of the unit quadratic X^2 - sX +/- 1 = 0.

    Args:
        spec: Deformation with r in {-1, +1}

    Returns:
        RootPair with p > 1 and |q| < 1

    Raises:
        DegenerateSpec: If (s, r) = (2, +1)
        InvalidSpec: If r is not a unit or s < 3 with r = +1
    """
    if spec.r not in (-1, 1):
        raise InvalidSpec(f"unit quadratic needs r = +/-1, got r = {spec.r}")
    return solve_quadratic(spec)


def deformation_q(spec: DeformationSpec) -> float:
    """
    The q at which the kind's deformed-integer formula reproduces u_n.

    symmetric: 1/p (= q since pq = 1); fermionic: the negative conjugate
    root; standard: the integer root s - 1; general: q paired with p.
    """
    roots = solve_quadratic(spec)
    if spec.kind == DeformationKind.STANDARD_ASYMMETRIC:
        return float(spec.s - 1)
    return roots.q


def pisot_sequence(spec: DeformationSpec, n_max: int) -> PisotSequence:
    """
    Exact integers u_0..u_{n_max} of u_{n+1} = s u_n - r u_{n-1}.

    Args:
        spec: Deformation parameters
        n_max: Last index to generate (>= 1)

    Returns:
        PisotSequence with values and running factorials
    """
    if n_max < 1:
        raise InvalidSpec(f"n_max must be >= 1, got {n_max}")

    values = [0, 1]
    for _ in range(n_max - 1):
        values.append(spec.s * values[-1] - spec.r * values[-2])

    factorials = [1]
    for u in values[1:]:
        factorials.append(factorials[-1] * u)

    return PisotSequence(spec=spec, values=values, factorials=factorials)


def _ratio_power(q: float, n: int) -> float:
    # q^(1-n) without forming q^-n on its own
    return math.copysign(1.0, q) ** (1 - n) * math.exp((1 - n) * math.log(abs(q)))


def deformed_integer(
    kind: Union[DeformationKind, str],
    q: float,
    n: int,
    p: Optional[float] = None,
) -> float:
    """
    Deformed integer of the given kind.

    symmetric:  (q^n - q^-n) / (q - q^-1), q > 1 mapped to 1/q, limit n at q = 1
    fermionic:  (q^n - (-1)^n q^-n) / (q + q^-1)
    standard:   (1 - q^n) / (1 - q), limit n at q = 1
    general_qp: (q^n - p^n) / (q - p)

    The symmetric and fermionic forms are evaluated as
    q^(1-n) (1 -/+ ...) / (1 +/- q^2) so large n does not overflow q^-n.
    """
    kind = DeformationKind(kind)
    if n < 0:
        raise InvalidSpec(f"n must be nonnegative, got {n}")
    if n == 0:
        return 0.0

    if kind == DeformationKind.SYMMETRIC:
        if q <= 0:
            raise InvalidSpec(f"symmetric deformation needs q > 0, got {q}")
        if q > 1:
            q = 1.0 / q
        if q == 1.0:
            return float(n)
        return _ratio_power(q, n) * (1.0 - q ** (2 * n)) / (1.0 - q * q)

    if kind == DeformationKind.FERMIONIC:
        if q == 0:
            raise InvalidSpec("fermionic deformation needs q != 0")
        sign = 1.0 if n % 2 == 0 else -1.0
        return _ratio_power(q, n) * (q ** (2 * n) - sign) / (1.0 + q * q)

    if kind == DeformationKind.STANDARD_ASYMMETRIC:
        if q == 1.0:
            return float(n)
        return (1.0 - q ** n) / (1.0 - q)

    if p is None:
        raise InvalidSpec("general qp deformation needs both p and q")
    if p == q:
        return n * p ** (n - 1)
    return (q ** n - p ** n) / (q - p)


def pisot_trace(q: float, atol: float = 1e-9) -> Optional[int]:
    """
    s if q (or 1/q) is the conjugate of a symmetric Pisot unit, else None.

    q + 1/q must be an integer s >= 3.
    """
    if q <= 0 or q == 1.0:
        return None
    s = q + 1.0 / q
    s_int = round(s)
    if s_int >= 3 and abs(s - s_int) < atol * s:
        return int(s_int)
    return None


def table1(n_max: int = 11) -> Dict[str, List[int]]:
    """
    The five reference rows, n = 1..n_max, as exact integers.

    Returns:
        Mapping from row label to its values
    """
    rows = {}
    for label, spec, shift in TABLE1_ROWS:
        seq = pisot_sequence(spec, n_max + shift)
        rows[label] = seq.values[1 + shift : n_max + 1 + shift]
    return rows
