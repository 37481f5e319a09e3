from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from pisotcs.client.config import get_config
from pisotcs.shared.errors import OutOfDomain


class QParam(BaseModel):
    """Deformation parameter in (0, 1) with its truncation settings."""

    model_config = ConfigDict(frozen=True)

    q: float = Field(..., description="Deformation parameter, 0 < q < 1.")
    tol: float = Field(1e-16, description="Relative truncation tolerance for series and products.")
    max_terms: int = Field(10000, description="Cap on summed terms.")

    @field_validator("q")
    @classmethod
    def _check_q(cls, v: float) -> float:
        if not 0.0 < v < 1.0:
            raise ValueError(f"q must lie in (0, 1), got {v}")
        return v

    @field_validator("tol")
    @classmethod
    def _check_tol(cls, v: float) -> float:
        if v <= 0:
            raise ValueError(f"tol must be positive, got {v}")
        return v

    @classmethod
    def resolve(
        cls,
        q: float,
        tol: Optional[float] = None,
        max_terms: Optional[int] = None,
    ) -> "QParam":
        """
        Build a QParam, taking missing settings from the global config.

        Raises:
            OutOfDomain: If q is not in (0, 1)
        """
        config = get_config()
        try:
            return cls(
                q=q,
                tol=config.tol if tol is None else tol,
                max_terms=config.max_terms if max_terms is None else max_terms,
            )
        except ValidationError as e:
            raise OutOfDomain(str(e)) from e


class SeriesResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: Union[float, complex] = Field(..., description="Sum of the series (or integral).")
    terms_used: int = Field(..., description="Number of terms actually summed.")
    truncation_bound: float = Field(0.0, description="Estimated magnitude of the neglected tail.")

    def __float__(self) -> float:
        return float(self.value.real if isinstance(self.value, complex) else self.value)

    def __complex__(self) -> complex:
        return complex(self.value)
