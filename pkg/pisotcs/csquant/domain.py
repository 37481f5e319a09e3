import math
from enum import Enum
from typing import List, Optional, Sequence, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from scipy import special

from pisotcs.pisot_core import DeformationSpec, deformed_integer
from pisotcs.shared.errors import InvalidSpec


class FockModel(BaseModel):
    """
    Deformed oscillator truncated to e_0..e_{n_max}.

    x and log_factorials carry two guard entries beyond n_max, needed for
    a-dagger on the last basis vector and for x_{n+2} in time evolution.
    """

    model_config = ConfigDict(frozen=True)

    q: float = Field(..., description="Deformation parameter in (0, 1], folded from q > 1.")
    spec: Optional[DeformationSpec] = Field(None, description="Pisot deformation when the spectrum is integral.")
    n_max: int = Field(..., description="Highest retained Fock index.")
    x: List[Union[int, float]] = Field(..., description="Spectrum x_0..x_{n_max+2}.")
    log_factorials: List[float] = Field(..., description="ln x_n! for n = 0..n_max+2.")
    z_max: float = Field(..., description="Phase-space radius the truncation was chosen for.")
    tol: float = Field(..., description="Tail tolerance used to choose n_max.")

    @model_validator(mode="after")
    def _check_spectrum(self) -> "FockModel":
        if self.n_max < 2:
            raise InvalidSpec(f"n_max must be >= 2, got {self.n_max}")
        if len(self.x) != self.n_max + 3 or len(self.log_factorials) != self.n_max + 3:
            raise InvalidSpec("spectrum must hold x_0..x_{n_max+2}")
        if self.x[0] != 0:
            raise InvalidSpec("x_0 must be 0")
        if any(b <= a for a, b in zip(self.x[1:], self.x[2:])):
            raise InvalidSpec("spectrum must be strictly increasing from n = 1")
        return self

    @property
    def exact(self) -> bool:
        """Integer spectrum (Pisot q or q = 1)."""
        return self.spec is not None or self.q == 1.0

    @property
    def dim(self) -> int:
        return self.n_max + 1

    @property
    def trace(self) -> Union[int, float]:
        """s = q + 1/q, so that x_{n+1} = s x_n - x_{n-1}."""
        if self.spec is not None:
            return self.spec.s
        if self.q == 1.0:
            return 2
        return self.q + 1.0 / self.q

    def spectrum(self, size: Optional[int] = None) -> np.ndarray:
        """x_0..x_{size-1} as floats (default: all stored entries)."""
        size = len(self.x) if size is None else size
        return np.array([float(v) for v in self.x[:size]])

    def log_fact(self, size: Optional[int] = None) -> np.ndarray:
        size = len(self.log_factorials) if size is None else size
        return np.asarray(self.log_factorials[:size], dtype=float)

    def x_at(self, n: int) -> Union[int, float]:
        """x_n for any n >= 0, extending past the stored entries."""
        if n < len(self.x):
            return self.x[n]
        if self.exact:
            s = self.trace
            prev, cur = self.x[-2], self.x[-1]
            for _ in range(n - len(self.x) + 1):
                prev, cur = cur, s * cur - prev
            return cur
        return deformed_integer("symmetric", self.q, n)

    def log_normalization(self, t: float) -> float:
        """ln N_q(t) = ln sum_{n<=n_max} t^n / x_n!, t >= 0."""
        if t == 0:
            return 0.0
        n = np.arange(self.dim)
        return float(special.logsumexp(n * math.log(t) - self.log_fact(self.dim)))

    def normalization(self, t: float) -> float:
        """N_q(t), the normalization of coherent states at |z|^2 = t."""
        return math.exp(self.log_normalization(t))


class CoherentState(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    z: complex = Field(..., description="Phase-space point.")
    coeffs: np.ndarray = Field(..., description="c_n = z^n / sqrt(N_q(|z|^2) x_n!), n = 0..n_max.")
    normalization: float = Field(..., description="N_q(|z|^2) over the retained indices.")
    tail_mass: float = Field(..., description="Estimated probability beyond n_max.")

    @field_validator("coeffs")
    @classmethod
    def _check_coeffs(cls, v: np.ndarray) -> np.ndarray:
        if v.ndim != 1:
            raise ValueError("coefficients must form a vector")
        return v.astype(complex)


class OperatorLabel(str, Enum):
    A = "a"
    A_DAGGER = "a_dagger"
    X_N = "x_N"
    Q = "Q"
    P = "P"
    A_THETA = "A_theta"
    A_RADIAL = "A_radial"
    A_ANGULAR = "A_angular"
    CUSTOM = "custom"


class TruncatedOperator(BaseModel):
    """Dense matrix in the truncated Fock basis."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    matrix: np.ndarray = Field(..., description="(n_max+1) x (n_max+1) matrix.")
    label: OperatorLabel = Field(..., description="What the matrix represents.")
    name: Optional[str] = Field(None, description="Free-form name for custom operators.")
    polluted_band: int = Field(2, description="Trailing rows/columns affected by truncation.")

    @field_validator("matrix")
    @classmethod
    def _check_square(cls, v: np.ndarray) -> np.ndarray:
        if v.ndim != 2 or v.shape[0] != v.shape[1]:
            raise ValueError(f"operator matrix must be square, got shape {v.shape}")
        return v

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def interior(self) -> np.ndarray:
        """The block free of truncation effects."""
        k = self.dim - self.polluted_band
        return self.matrix[:k, :k]

    def is_hermitian(self) -> bool:
        return bool(np.array_equal(self.matrix, self.matrix.conj().T))


class FourierSeries(BaseModel):
    """Coefficients c_k, -K <= k <= K, of F(theta) = sum c_k e^{ik theta}."""

    model_config = ConfigDict(frozen=True)

    k_max: int = Field(..., description="K, the largest retained |k|.")
    coefficients: List[complex] = Field(..., description="c_{-K}..c_K.")

    @model_validator(mode="after")
    def _check_length(self) -> "FourierSeries":
        if len(self.coefficients) != 2 * self.k_max + 1:
            raise InvalidSpec("need 2K + 1 coefficients")
        return self

    def c(self, k: int) -> complex:
        if abs(k) > self.k_max:
            return 0j
        return self.coefficients[k + self.k_max]

    def is_real(self, tol: float = 0.0) -> bool:
        """c_{-k} = conj(c_k), i.e. F is real."""
        return all(
            abs(self.c(-k) - self.c(k).conjugate()) <= tol for k in range(self.k_max + 1)
        )

    @classmethod
    def constant(cls, value: complex = 1.0) -> "FourierSeries":
        return cls(k_max=0, coefficients=[complex(value)])

    @classmethod
    def sawtooth(cls, k_max: int) -> "FourierSeries":
        """The angle function theta on [0, 2 pi): c_0 = pi, c_k = i/k."""
        coeffs = [1j / k if k else complex(math.pi) for k in range(-k_max, k_max + 1)]
        return cls(k_max=k_max, coefficients=coeffs)

    @classmethod
    def from_samples(cls, values: Sequence[float], k_max: int) -> "FourierSeries":
        """Coefficients of F sampled at theta_m = 2 pi m / M, m = 0..M-1."""
        samples = np.asarray(values, dtype=complex)
        if len(samples) < 2 * k_max + 1:
            raise InvalidSpec(f"need at least {2 * k_max + 1} samples for K = {k_max}")
        spectrum = np.fft.fft(samples) / len(samples)
        coeffs = [complex(spectrum[k % len(samples)]) for k in range(-k_max, k_max + 1)]
        return cls(k_max=k_max, coefficients=coeffs)


class LadderSet(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    a: TruncatedOperator
    a_dagger: TruncatedOperator
    x_N: TruncatedOperator
    Q: TruncatedOperator
    P: TruncatedOperator
    commutator_a: TruncatedOperator = Field(..., description="[a, a_dagger].")
    commutator_qp: TruncatedOperator = Field(..., description="[Q, P].")
    position_squared: TruncatedOperator = Field(..., description="Quantized q^2, (a^2 + a_dagger^2 + 2 a a_dagger) / 2.")
    momentum_squared: TruncatedOperator = Field(..., description="Quantized p^2, (2 a a_dagger - a^2 - a_dagger^2) / 2.")


class PhotonStatistics(BaseModel):
    probs: List[float] = Field(..., description="rho_q(n, |z|), n = 0..n_max.")
    mean: float = Field(..., description="<x_N>, equal to |z|^2.")
    mean_number: float = Field(..., description="<N>, mean occupation number.")
    mandel: float = Field(..., description="Mandel parameter of the occupation number N.")
    mandel_spectral: float = Field(..., description="Mandel form evaluated on x_N.")
    characteristic: List[float] = Field(..., description="rho_q(n) = (x_{n+1}/x_n) / ((n+1)/n), n = 1..")
    snr: float = Field(..., description="<Q>^2 / (Delta Q)^2.")


class Dispersions(BaseModel):
    var_q: float = Field(..., description="(Delta Q)^2.")
    var_p: float = Field(..., description="(Delta P)^2.")
    product: float = Field(..., description="var_q * var_p.")
    closed_form: float = Field(..., description="var_q through the recurrence-based closed form.")
