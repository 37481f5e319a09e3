import math
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from pisotcs.pisot_core import DeformationKind, DeformationSpec, deformation_q
from pisotcs.shared.errors import InvalidSpec

Cell = Union[int, float, str]


class QSpecifier(BaseModel):
    """
    A deformation parameter given on the command line.

    Forms: "s:3" (symmetric Pisot, s >= 3), "f:1" (fermionic Pisot,
    X^2 - sX - 1 with s >= 1, q the negative conjugate root), "val:0.7071"
    (explicit real, mapped to min(q, 1/q)) and "1" (classical limit).
    """

    model_config = ConfigDict(frozen=True)

    text: str = Field(..., description="Specifier as typed.")
    q: float = Field(..., description="Deformation parameter; in (0, 1], negative for f: specifiers.")
    spec: Optional[DeformationSpec] = Field(None, description="Pisot spec for s: and f: specifiers.")

    @classmethod
    def parse(cls, text: str) -> "QSpecifier":
        raw = text.strip()
        kind, sep, value = raw.partition(":")
        try:
            if not sep:
                if float(raw) == 1.0:
                    return cls(text=raw, q=1.0)
            elif kind == "s":
                spec = DeformationSpec.bosonic(int(value))
                return cls(text=raw, q=2.0 / (spec.s + math.sqrt(spec.s ** 2 - 4)), spec=spec)
            elif kind == "f":
                spec = DeformationSpec.fermionic(int(value))
                return cls(text=raw, q=deformation_q(spec), spec=spec)
            if kind == "val":
                q = float(value)
                if not (math.isfinite(q) and q > 0):
                    raise InvalidSpec(f"q must be a positive real, got {value}")
                return cls(text=raw, q=min(q, 1.0 / q))
        except ValueError as e:
            raise InvalidSpec(f"cannot parse q specifier {text!r}: {e}") from e
        raise InvalidSpec(f"unknown q specifier {text!r}; use s:<int>, f:<int>, val:<real> or 1")

    @property
    def source(self) -> Union[DeformationSpec, float]:
        """Argument for csquant.build_model."""
        return self.spec if self.spec is not None else self.q

    @property
    def fermionic(self) -> bool:
        return self.spec is not None and self.spec.kind == DeformationKind.FERMIONIC

    @property
    def s(self) -> Optional[int]:
        return self.spec.s if self.spec is not None else None

    @property
    def label(self) -> str:
        if self.fermionic:
            return f"f{self.spec.s}"
        if self.spec is not None:
            return f"s{self.spec.s}"
        if self.q == 1.0:
            return "q1"
        return f"q{self.q:.6g}"


class GridSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    start: float
    stop: float
    num: int = Field(..., ge=1)

    @model_validator(mode="after")
    def _check_finite(self) -> "GridSpec":
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise InvalidSpec("grid bounds must be finite")
        return self

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        """start:stop:num."""
        parts = text.split(":")
        if len(parts) != 3:
            raise InvalidSpec(f"grid must read start:stop:num, got {text!r}")
        try:
            return cls(start=float(parts[0]), stop=float(parts[1]), num=int(parts[2]))
        except ValueError as e:
            raise InvalidSpec(f"bad grid {text!r}: {e}") from e

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.num)


class FigureRequest(BaseModel):
    """One target invocation with its defaults already filled in."""

    target: str = Field(..., description="Target name, see pisotcs list.")
    q_list: List[QSpecifier] = Field(..., description="Deformation parameters to evaluate.")
    z_list: List[complex] = Field(default_factory=list, description="Phase-space points or radii.")
    k_list: List[int] = Field(default_factory=list, description="Fourier orders for dkr.")
    grid: Optional[GridSpec] = Field(None, description="Sweep variable.")
    z0: complex = Field(1.0, description="Reference point of the phase density.")
    time: float = Field(0.0, description="Evolution time of the phase density.")
    out: Optional[Path] = Field(None, description="Output path, stdout when omitted.")
    format: Literal["csv", "json"] = Field("csv", description="Dataset format.")
    emit_plot: bool = Field(False, description="Also write a gnuplot script next to the data.")
    with_runtime: bool = Field(False, description="Write the measured runtime into the metadata.")

    @field_validator("q_list")
    @classmethod
    def _need_q(cls, v: List[QSpecifier]) -> List[QSpecifier]:
        if not v:
            raise InvalidSpec("at least one q specifier is required")
        return v


class Dataset(BaseModel):
    """Named, equally long columns plus metadata."""

    target: str
    columns: Dict[str, List[Cell]] = Field(..., description="Columns in output order.")
    metadata: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_lengths(self) -> "Dataset":
        lengths = {len(v) for v in self.columns.values()}
        if len(lengths) > 1:
            raise InvalidSpec(f"columns of {self.target} differ in length: {sorted(lengths)}")
        return self

    @property
    def n_rows(self) -> int:
        return len(next(iter(self.columns.values()), []))
