from enum import Enum
from typing import Callable, List, Optional, Union

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field, model_validator

from pisotcs.shared.errors import InvalidSpec

# Densities map t > 0 (scalar or array) to values of the same shape
Density = Callable[[ArrayLike], Union[float, np.ndarray]]


class DensityKind(str, Enum):
    G_Q = "g_q"
    W_Q = "w_q"


class DiscreteMeasure(BaseModel):
    """Atomic measure sum_j weight_j delta(t - t_j) on (0, inf)."""

    model_config = ConfigDict(frozen=True)

    atoms: List[float] = Field(..., description="Atom positions t_j, strictly decreasing.")
    weights: List[float] = Field(..., description="Strictly positive atom weights.")
    q: Optional[float] = Field(None, description="Deformation parameter the measure was built for.")
    j_max: int = Field(..., description="Index of the last atom kept.")

    @model_validator(mode="after")
    def _check_atoms(self) -> "DiscreteMeasure":
        if len(self.atoms) != len(self.weights) or len(self.atoms) != self.j_max + 1:
            raise InvalidSpec("atoms, weights and j_max disagree in length")
        if any(t <= 0 for t in self.atoms):
            raise InvalidSpec("atoms must be positive")
        if any(w <= 0 for w in self.weights):
            raise InvalidSpec("weights must be strictly positive")
        if any(b >= a for a, b in zip(self.atoms, self.atoms[1:])):
            raise InvalidSpec("atoms must be strictly decreasing")
        return self

    @classmethod
    def unit_mass(cls, at: float = 1.0) -> "DiscreteMeasure":
        return cls(atoms=[at], weights=[1.0], j_max=0)

    def moment(self, n: float) -> float:
        """sum_j t_j^n weight_j."""
        t = np.asarray(self.atoms)
        w = np.asarray(self.weights)
        return float(np.sum(np.power(t, n) * w))


class WeightDensity(BaseModel):
    """The density g_q or w_q as a callable."""

    model_config = ConfigDict(frozen=True)

    q: float = Field(..., description="Deformation parameter, 0 < q < 1.")
    kind: DensityKind = Field(..., description="Which density.")
    j_max: Optional[int] = Field(None, description="Last atom used by w_q (default from the measure cut-off).")

    def __call__(self, t: ArrayLike) -> Union[float, np.ndarray]:
        from .measures import g_density, w_density

        if self.kind == DensityKind.G_Q:
            return g_density(self.q, t)
        return w_density(self.q, t, self.j_max)


class MomentResidual(BaseModel):
    q: float = Field(..., description="Deformation parameter.")
    n: int = Field(..., description="Moment order.")
    quadrature: float = Field(..., description="|int t^n w_q dt - x_n!| / x_n! by adaptive quadrature.")
    factorized: float = Field(..., description="Same residual through the factorized moment formula.")
