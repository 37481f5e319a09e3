"""
Ladder, quadrature and quantized-function operators on the truncated basis.
"""

import math
from typing import Callable

import numpy as np

from pisotcs.moment import radial_moment
from pisotcs.shared.utils.logging import get_component_logger

from .angle import log_mid_factorials
from .domain import FockModel, FourierSeries, LadderSet, OperatorLabel, TruncatedOperator
from .model import coherent_state

logger = get_component_logger("csquant")


def _op(matrix: np.ndarray, label: OperatorLabel, name: str = None) -> TruncatedOperator:
    return TruncatedOperator(matrix=matrix, label=label, name=name)


def ladder_and_quadratures(model: FockModel) -> LadderSet:
    """
    a|e_n> = sqrt(x_n)|e_{n-1}>, a_dagger = a^T, Q = (a + a_dagger)/sqrt2,
    P = (a - a_dagger)/(i sqrt2), plus the commutators and quantized q^2, p^2.
    """
    x = model.spectrum()
    dim = model.dim

    a = np.diag(np.sqrt(x[1:dim]), k=1).astype(complex)
    a_dag = a.T.copy()
    x_n = np.diag(x[:dim]).astype(complex)
    q_op = (a + a_dag) / math.sqrt(2.0)
    p_op = (a - a_dag) * (-1j / math.sqrt(2.0))

    a2 = a @ a
    a_dag2 = a_dag @ a_dag
    # A_{z zbar} = diag(x_{n+1}) uses the guard entry on the last row
    a_zzbar = np.diag(x[1:dim + 1]).astype(complex)

    return LadderSet(
        a=_op(a, OperatorLabel.A),
        a_dagger=_op(a_dag, OperatorLabel.A_DAGGER),
        x_N=_op(x_n, OperatorLabel.X_N),
        Q=_op(q_op, OperatorLabel.Q),
        P=_op(p_op, OperatorLabel.P),
        commutator_a=_op(a @ a_dag - a_dag @ a, OperatorLabel.CUSTOM, "[a, a_dagger]"),
        commutator_qp=_op(q_op @ p_op - p_op @ q_op, OperatorLabel.CUSTOM, "[Q, P]"),
        position_squared=_op((a2 + a_dag2 + 2.0 * a_zzbar) / 2.0, OperatorLabel.CUSTOM, "A_q2"),
        momentum_squared=_op((2.0 * a_zzbar - a2 - a_dag2) / 2.0, OperatorLabel.CUSTOM, "A_p2"),
    )


def quantize_radial(model: FockModel, f: Callable[[float], float]) -> TruncatedOperator:
    """
    Diagonal operator with entries (1/x_n!) int f(t) t^n w_q(t) dt.

    Raises:
        NonConvergent: If a moment quadrature misses its tolerance
    """
    lf = model.log_fact(model.dim)
    diag = [radial_moment(model.q, f, n, log_norm=float(lf[n])) for n in range(model.dim)]
    logger.debug(f"quantized radial function on {model.dim} basis vectors")
    return _op(np.diag(np.asarray(diag, dtype=complex)), OperatorLabel.A_RADIAL)


def angle_factors(model: FockModel) -> np.ndarray:
    """x_{(n+n')/2}! / sqrt(x_n! x_n'!), bounded by 1 by log-convexity."""
    lf = model.log_fact(model.dim)
    mid = log_mid_factorials(model)
    n = np.arange(model.dim)
    total = np.add.outer(n, n)
    return np.exp(mid[total] - 0.5 * np.add.outer(lf, lf))


def quantize_angular(
    model: FockModel,
    F: FourierSeries,
    label: OperatorLabel = OperatorLabel.A_ANGULAR,
) -> TruncatedOperator:
    """
    (A_F)_{nn'} = c_{n'-n}(F) x_{(n+n')/2}! / sqrt(x_n! x_n'!).

    For real F the lower triangle is the conjugate mirror of the upper one,
    so the matrix is exactly Hermitian.
    """
    factors = angle_factors(model)
    dim = model.dim
    matrix = np.zeros((dim, dim), dtype=complex)
    hermitian = F.is_real()
    for n in range(dim):
        for m in range(n if hermitian else 0, dim):
            c = F.c(m - n)
            if c:
                matrix[n, m] = c * factors[n, m]
        if hermitian:
            matrix[n, n] = matrix[n, n].real
            matrix[n + 1:, n] = matrix[n, n + 1:].conj()
    return _op(matrix, label)


def angle_operator(model: FockModel) -> TruncatedOperator:
    """pi I + i sum_{n != n'} x_{(n+n')/2}!/sqrt(x_n! x_n'!) / (n' - n) |e_n><e_n'|."""
    return quantize_angular(model, FourierSeries.sawtooth(model.n_max), label=OperatorLabel.A_THETA)


def lower_symbol(model: FockModel, op: TruncatedOperator, z: complex) -> complex:
    """<v_z| A |v_z>."""
    coeffs = coherent_state(model, z).coeffs
    return complex(np.vdot(coeffs, op.matrix @ coeffs))
