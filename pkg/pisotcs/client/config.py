"""
Configuration management for pisotcs.

This module provides a global configuration system for the package:
numerical tolerances, truncation caps and CLI defaults.
"""

import os
from pathlib import Path
from typing import Any, Dict, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from pisotcs.shared.errors import InvalidSpec

ENV_PREFIX = "PISOTCS_"


class PisotcsConfig(BaseModel):
    """Global configuration for pisotcs."""

    model_config = ConfigDict(validate_assignment=True)

    # Logging settings
    verbose: bool = Field(
        default=False,
        description="Enable verbose output (debug logging)"
    )
    log_level: str = Field(
        default="warning",
        description="Logging level (debug, info, warning, error, critical, none)"
    )

    # Numerical settings
    tol: float = Field(
        default=1e-16,
        gt=0,
        description="Relative truncation tolerance for series and infinite products"
    )
    max_terms: int = Field(
        default=10000,
        ge=1,
        description="Maximum number of terms summed before a series is declared non-convergent"
    )
    quad_tol: float = Field(
        default=1e-10,
        gt=0,
        description="Relative tolerance requested from adaptive quadrature"
    )
    j_max_tol: float = Field(
        default=1e-18,
        gt=0,
        description="Atoms of the discrete moment measure are kept while q^(2j) >= j_max_tol"
    )

    # CLI settings
    z_max: float = Field(
        default=6.0,
        ge=0,
        description="Phase-space radius covered by Fock models built for figure targets"
    )
    workers: int = Field(
        default=4,
        ge=1,
        description="Worker threads used to evaluate independent grid points"
    )
    output_format: Literal["csv", "json"] = Field(
        default="csv",
        description="Default dataset format written by the CLI"
    )


# Global configuration instance
_config = PisotcsConfig()


def get_config() -> PisotcsConfig:
    """Get the current configuration."""
    return _config


def configure(
    verbose: Optional[bool] = None,
    log_level: Optional[str] = None,
    tol: Optional[float] = None,
    max_terms: Optional[int] = None,
    quad_tol: Optional[float] = None,
    workers: Optional[int] = None,
    **kwargs: Any
) -> PisotcsConfig:
    """
    Configure pisotcs globally.

    Args:
        verbose: Enable verbose output (debug logging)
        log_level: Logging level (debug, info, warning, error, critical, none)
        tol: Relative truncation tolerance for series and products
        max_terms: Cap on summed terms
        quad_tol: Relative tolerance for adaptive quadrature
        workers: Worker threads for CLI grid sweeps
        **kwargs: Additional configuration options (any PisotcsConfig field)

    Returns:
        Updated configuration
    """
    update_dict = {k: v for k, v in locals().items()
                   if k != 'kwargs' and v is not None}
    update_dict.update(kwargs)

    for key, value in update_dict.items():
        if key in PisotcsConfig.model_fields:
            setattr(_config, key, value)

    if verbose is not None or log_level is not None:
        from pisotcs.shared.utils.logging import configure_logging

        # verbose takes precedence over log_level
        if verbose is not None:
            configure_logging(verbose=verbose)
        elif log_level is not None:
            configure_logging(level=log_level)

    return _config


def reset() -> PisotcsConfig:
    """Restore every field to its default value."""
    for key, field_info in PisotcsConfig.model_fields.items():
        setattr(_config, key, field_info.default)
    return _config


def _coerce(key: str, value: str) -> Any:
    annotation = PisotcsConfig.model_fields[key].annotation
    if annotation == bool:
        return value.strip().lower() in ('true', 'yes', '1', 't', 'y')
    elif annotation == int:
        return int(value)
    elif annotation == float:
        return float(value)
    return value.strip()


def load_from_env() -> PisotcsConfig:
    """
    Load configuration from environment variables.

    Environment variables should be prefixed with PISOTCS_,
    e.g., PISOTCS_TOL=1e-12, PISOTCS_WORKERS=8

    Returns:
        Updated configuration
    """
    config_updates = {}

    for key in PisotcsConfig.model_fields:
        env_key = f"{ENV_PREFIX}{key.upper()}"
        if env_key in os.environ:
            config_updates[key] = _coerce(key, os.environ[env_key])

    return configure(**config_updates)


def load_from_file(path: Union[str, Path]) -> PisotcsConfig:
    """
    Load configuration from a key=value file.

    Blank lines and lines starting with '#' are ignored. Keys are
    PisotcsConfig field names (case-insensitive, optional PISOTCS_ prefix).

    Args:
        path: Path to the configuration file

    Returns:
        Updated configuration

    Raises:
        InvalidSpec: If a line is malformed or names an unknown key
    """
    config_updates: Dict[str, Any] = {}
    text = Path(path).read_text(encoding="utf-8")

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise InvalidSpec(f"{path}:{lineno}: expected key=value, got {raw!r}")

        key, value = (part.strip() for part in line.split("=", 1))
        key = key.lower()
        if key.startswith(ENV_PREFIX.lower()):
            key = key[len(ENV_PREFIX):]
        if key not in PisotcsConfig.model_fields:
            raise InvalidSpec(f"{path}:{lineno}: unknown configuration key {key!r}")

        config_updates[key] = _coerce(key, value)

    return configure(**config_updates)


# Initialize from environment variables on module load
load_from_env()
