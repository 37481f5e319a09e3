import math
from enum import Enum
from typing import Any, List, NamedTuple, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from pisotcs.shared.errors import DegenerateSpec, InvalidSpec


class DeformationKind(str, Enum):
    SYMMETRIC = "symmetric"
    FERMIONIC = "fermionic"
    STANDARD_ASYMMETRIC = "standard_asymmetric"
    GENERAL_QP = "general_qp"


class ConjugateCase(str, Enum):
    POSITIVE = "positive_conjugate"
    NEGATIVE = "negative_conjugate"


class DeformationSpec(BaseModel):
    """Deformation family given by the quadratic X^2 - s X + r = 0."""

    model_config = ConfigDict(frozen=True)

    s: int = Field(..., description="Integer trace p + q.")
    r: int = Field(..., description="Integer norm p * q.")
    kind: DeformationKind = Field(..., description="Deformation family; inferred from r when omitted.")

    @model_validator(mode="before")
    @classmethod
    def _infer_kind(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("kind") is None and "r" in data:
            r, s = data["r"], data.get("s")
            if r == 1:
                kind = DeformationKind.SYMMETRIC
            elif r == -1:
                kind = DeformationKind.FERMIONIC
            elif s is not None and r == s - 1:
                kind = DeformationKind.STANDARD_ASYMMETRIC
            else:
                kind = DeformationKind.GENERAL_QP
            data = {**data, "kind": kind}
        return data

    @model_validator(mode="after")
    def _check_inequalities(self) -> "DeformationSpec":
        s, r = self.s, self.r
        if s < 1:
            raise InvalidSpec(f"trace s must be >= 1, got {s}")

        if self.kind == DeformationKind.SYMMETRIC:
            if r != 1:
                raise InvalidSpec(f"symmetric deformation needs r = +1, got r = {r}")
            if s == 2:
                raise DegenerateSpec("(s, r) = (2, +1) gives the double root p = q = 1")
            if s < 3:
                raise InvalidSpec(f"symmetric deformation needs s >= 3, got s = {s}")
        elif self.kind == DeformationKind.FERMIONIC:
            if r != -1:
                raise InvalidSpec(f"fermionic deformation needs r = -1, got r = {r}")
        elif self.kind == DeformationKind.STANDARD_ASYMMETRIC:
            if r != s - 1:
                raise InvalidSpec(f"standard deformation needs r = s - 1, got (s, r) = ({s}, {r})")
            if s == 2:
                raise DegenerateSpec("(s, r) = (2, 1) gives the double root p = q = 1")
            if s < 3:
                raise InvalidSpec(f"standard deformation needs s >= 3, got s = {s}")
        else:
            if r == 0:
                raise InvalidSpec("general qp deformation needs r != 0")
            if s * s - 4 * r <= 0:
                raise InvalidSpec(f"roots of X^2 - {s}X + {r} are not real and distinct")
        return self

    @classmethod
    def bosonic(cls, s: int) -> "DeformationSpec":
        return cls(s=s, r=1, kind=DeformationKind.SYMMETRIC)

    @classmethod
    def fermionic(cls, s: int) -> "DeformationSpec":
        return cls(s=s, r=-1, kind=DeformationKind.FERMIONIC)

    @property
    def discriminant(self) -> int:
        return self.s * self.s - 4 * self.r


class RootPair(BaseModel):
    """
    Roots of X^2 - s X + r = 0 with p the dominant root.

    The exact surd form is p, q = (s +/- sqrt(discriminant)) / 2.
    """

    model_config = ConfigDict(frozen=True)

    p: float = Field(..., description="Dominant root.")
    q: float = Field(..., description="Conjugate root.")
    s: int = Field(..., description="Exact trace p + q.")
    r: int = Field(..., description="Exact norm p * q.")
    discriminant: int = Field(..., description="s^2 - 4r, the radicand of the surd form.")

    @model_validator(mode="after")
    def _check_roots(self) -> "RootPair":
        if self.discriminant != self.s * self.s - 4 * self.r:
            raise InvalidSpec("discriminant does not match (s, r)")
        if not math.isclose(self.p * self.q, self.r, rel_tol=1e-12, abs_tol=1e-12):
            raise InvalidSpec(f"p*q = {self.p * self.q} differs from r = {self.r}")
        if not math.isclose(self.p + self.q, self.s, rel_tol=1e-12, abs_tol=1e-12):
            raise InvalidSpec(f"p+q = {self.p + self.q} differs from s = {self.s}")
        return self

    @property
    def is_pisot(self) -> bool:
        return self.p > 1 and abs(self.q) < 1


class PisotSequence(BaseModel):
    model_config = ConfigDict(frozen=True)

    spec: DeformationSpec = Field(..., description="Deformation that generated the sequence.")
    values: List[int] = Field(..., description="Exact integers u_0..u_N.")
    factorials: List[int] = Field(..., description="Exact products u_1...u_n with u_0! = 1.")

    @model_validator(mode="after")
    def _check_recurrence(self) -> "PisotSequence":
        u = self.values
        if len(u) < 2 or u[0] != 0 or u[1] != 1:
            raise InvalidSpec("sequence must start with u_0 = 0, u_1 = 1")
        if len(self.factorials) != len(u):
            raise InvalidSpec("factorials and values differ in length")
        s, r = self.spec.s, self.spec.r
        for n in range(1, len(u) - 1):
            if u[n + 1] != s * u[n] - r * u[n - 1]:
                raise InvalidSpec(f"recurrence broken at n = {n + 1}")
        return self

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def log_factorials(self) -> List[float]:
        """ln u_n! from the exact integers (u_0! = u_1! = 1)."""
        return [math.log(f) for f in self.factorials]


class GeneralPisotParams(BaseModel):
    """Integer parameters of a general quadratic Pisot number beta."""

    model_config = ConfigDict(frozen=True)

    case: ConjugateCase = Field(..., description="Sign of the conjugate root.")
    a: Optional[int] = Field(None, description="Positive case: beta satisfies X^2 - (a+1)X + (a-b) = 0.")
    b: Optional[int] = Field(None, description="Positive case: 0 < b <= a - 1.")
    c: Optional[int] = Field(None, description="Negative case: beta satisfies X^2 - cX - d = 0.")
    d: Optional[int] = Field(None, description="Negative case: 1 <= d <= c.")

    @model_validator(mode="after")
    def _check_inequalities(self) -> "GeneralPisotParams":
        if self.case == ConjugateCase.POSITIVE:
            a, b = self.a, self.b
            if a is None or b is None:
                raise InvalidSpec("positive conjugate case needs a and b")
            if not (b > 0 and a >= b + 1):
                raise InvalidSpec(f"positive conjugate case needs a >= b + 1 and b > 0, got a={a}, b={b}")
        else:
            c, d = self.c, self.d
            if c is None or d is None:
                raise InvalidSpec("negative conjugate case needs c and d")
            if not (c >= d >= 1):
                raise InvalidSpec(f"negative conjugate case needs c >= d >= 1, got c={c}, d={d}")
        return self

    @property
    def trace(self) -> int:
        """s in X^2 - sX + r."""
        if self.case == ConjugateCase.POSITIVE:
            return self.a + 1
        return self.c

    @property
    def norm(self) -> int:
        """r in X^2 - sX + r, i.e. beta * beta'."""
        if self.case == ConjugateCase.POSITIVE:
            return self.a - self.b
        return -self.d

    @property
    def floor(self) -> int:
        """Integer part of beta."""
        return self.a if self.case == ConjugateCase.POSITIVE else self.c


class PowerTerms(NamedTuple):
    """beta^n = v * beta + w, with trace = beta^n + beta'^n."""
    v: int
    w: int
    trace: int
