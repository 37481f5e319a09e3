"""
Logging utilities for pisotcs.

All records go through the ``pisotcs`` logger. Each computational layer
logs through a child named after it; the set of layers is fixed in
``COMPONENTS``. Levels come from ``PISOTCS_LOG_LEVEL`` for the package and
``PISOTCS_<COMPONENT>_LOG_LEVEL`` for a single layer, e.g.
``PISOTCS_QCALC_LOG_LEVEL=debug`` to trace series truncation only.
"""

import logging
import os
import sys
from typing import Dict, Literal, Optional, Union

DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

logger = logging.getLogger("pisotcs")

COMPONENTS = ("pisot_core", "qcalc", "moment", "csquant", "cli")

_component_loggers: Dict[str, logging.Logger] = {}

ENV_LOG_LEVEL = "PISOTCS_LOG_LEVEL"
ENV_COMPONENT_LOG_LEVEL = "PISOTCS_{component}_LOG_LEVEL"

LOG_LEVELS = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
    "critical": logging.CRITICAL,
    "none": logging.CRITICAL + 10,  # Higher than any standard level
}

LevelName = Literal["debug", "info", "warning", "error", "critical", "none"]

# Datasets may be streamed to stdout, so log records go to stderr
if not logger.handlers:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(DEFAULT_FORMAT))
    logger.addHandler(handler)

    default_level = os.environ.get(ENV_LOG_LEVEL, "warning").lower()
    logger.setLevel(LOG_LEVELS.get(default_level, logging.WARNING))


def _resolve_level(level: Union[str, int]) -> int:
    if isinstance(level, str):
        return LOG_LEVELS.get(level.lower(), logging.WARNING)
    return level


def configure_logging(
    level: Optional[Union[str, int]] = None,
    format: Optional[str] = None,
    handler: Optional[logging.Handler] = None,
    verbose: Optional[bool] = None,
) -> None:
    """
    Configure the package logger.

    Args:
        level: Log level (debug, info, warning, error, critical, none, or integer level)
        format: Log message format
        handler: Custom log handler, stderr when omitted
        verbose: True for debug, False for warning
    """
    logger.handlers.clear()

    if handler is None:
        handler = logging.StreamHandler(sys.stderr)

    handler.setFormatter(logging.Formatter(format or DEFAULT_FORMAT))
    logger.addHandler(handler)

    if verbose is not None:
        level = "debug" if verbose else "warning"

    if level is not None:
        logger.setLevel(_resolve_level(level))


def get_component_logger(component_name: str) -> logging.Logger:
    """
    Get the logger of one computational layer.

    The first call applies ``PISOTCS_<COMPONENT>_LOG_LEVEL`` when set.

    Raises:
        ValueError: If the component is not one of ``COMPONENTS``.
    """
    if component_name not in COMPONENTS:
        raise ValueError(
            f"Unknown logging component {component_name!r}; expected one of {', '.join(COMPONENTS)}"
        )
    if component_name not in _component_loggers:
        component_logger = logger.getChild(component_name)
        env_level = os.environ.get(ENV_COMPONENT_LOG_LEVEL.format(component=component_name.upper()))
        if env_level:
            component_logger.setLevel(_resolve_level(env_level))
        _component_loggers[component_name] = component_logger
    return _component_loggers[component_name]


def set_component_level(component_name: str, level: Union[str, int, LevelName]) -> None:
    """Set the level of one computational layer."""
    get_component_logger(component_name).setLevel(_resolve_level(level))


def enable_debug() -> None:
    """Enable debug logging for all components."""
    configure_logging(level=logging.DEBUG)


def disable_logging() -> None:
    """Disable all logging."""
    configure_logging(level=LOG_LEVELS["none"])
